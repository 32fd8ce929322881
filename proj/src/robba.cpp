#include "wr/robba.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace wr {

namespace {

constexpr long kMaxWittLen = 30;

// exact valuation of a coordinate; nullopt for an exact zero
std::optional<Rat> coord_val(const PerfLaurent& t) {
  if (t.is_zero()) {
    if (t.is_exact()) return std::nullopt;
    throw precision_error("robba: coordinate valuation indeterminate");
  }
  return t.v_pi().finite();
}

bool exact_zero_el(const RobbaEl& x) {
  if (!x.is_zero()) return false;
  for (const auto& t : x.witt().coords())
    if (!t.is_exact()) return false;
  return true;
}

}  // namespace

RobbaEl::RobbaEl(WittPl w, long e) : w_(std::move(w)), e_(e) {
  // strip exact-zero leading coordinates into the shift; a coordinate that
  // is merely zero within precision stays in place
  auto exact_zero = [](const PerfLaurent& t) {
    return t.is_zero() && t.is_exact();
  };
  while (w_.len() > 1 && exact_zero(w_.coord(0))) {
    w_ = w_.div_by_p().truncate(w_.len() - 1);
    ++e_;
  }
  if (exact_zero(w_.coord(0)) && w_.len() == 1) e_ = 0;
}

RobbaEl RobbaEl::zero(ConfigPtr cfg, long n) {
  return RobbaEl(WittPl::zero(std::move(cfg), n), 0);
}

RobbaEl RobbaEl::teichmuller(ConfigPtr cfg, long n, const PerfLaurent& t0) {
  return RobbaEl(WittPl::teichmuller(std::move(cfg), n, t0), 0);
}

bool RobbaEl::in_plus() const {
  if (e_ < 0) return false;
  for (const auto& t : w_.coords()) {
    auto v = coord_val(t);
    if (v && *v < 0) return false;
  }
  return true;
}

RobbaEl RobbaEl::operator+(const RobbaEl& o) const {
  if (exact_zero_el(*this)) return o;
  if (exact_zero_el(o)) return *this;
  long e = std::min(e_, o.e_);
  long d1 = e_ - e, d2 = o.e_ - e;
  long L = std::max(len() + d1, o.len() + d2);
  if (L > kMaxWittLen)
    throw precision_error("RobbaEl: shift alignment exceeds max Witt length");
  WittPl a = w_.extend(L), b = o.w_.extend(L);
  for (long k = 0; k < d1; ++k) a = a.mul_by_p();
  for (long k = 0; k < d2; ++k) b = b.mul_by_p();
  return RobbaEl(a + b, e);
}

RobbaEl RobbaEl::operator-() const { return RobbaEl(-w_, e_); }

RobbaEl RobbaEl::operator-(const RobbaEl& o) const { return *this + (-o); }

RobbaEl RobbaEl::operator*(const RobbaEl& o) const {
  if (exact_zero_el(*this) || exact_zero_el(o))
    return zero(cfg(), std::min(len(), o.len()));
  long L = std::min(len() + o.len() - 1, kMaxWittLen);
  return RobbaEl(w_.extend(L) * o.w_.extend(L), e_ + o.e_);
}

bool RobbaEl::operator==(const RobbaEl& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  if (e_ != o.e_) return false;
  long L = std::max(len(), o.len());
  return w_.extend(L) == o.w_.extend(L);
}

RobbaEl RobbaEl::iterate_frobenius(long k) const {
  RobbaEl r = *this;
  for (long i = 0; i < k; ++i) r = r.frobenius();
  for (long i = 0; i > k; --i) r = r.inv_frobenius();
  return r;
}

RobbaEl RobbaEl::truncate_at(long prec) const {
  if (prec <= e_) return RobbaEl::zero(w_.cfg(), 1);
  long keep = prec - e_;
  if (keep >= len()) return *this;
  return RobbaEl(w_.truncate(keep), e_);
}

std::string RobbaEl::str() const {
  std::ostringstream os;
  os << "p^" << e_ << " * " << w_.str();
  return os.str();
}

NewtonPolygon::NewtonPolygon(std::vector<NewtonSlope> s) : s_(std::move(s)) {
  for (size_t i = 0; i < s_.size(); ++i) {
    if (s_[i].slope <= 0 || s_[i].mult <= 0)
      throw domain_error("NewtonPolygon: slopes and multiplicities positive");
    if (i && s_[i - 1].slope >= s_[i].slope)
      throw domain_error("NewtonPolygon: slopes must strictly increase");
  }
}

NewtonPolygon NewtonPolygon::merge(const NewtonPolygon& a,
                                   const NewtonPolygon& b) {
  std::vector<NewtonSlope> m;
  size_t i = 0, j = 0;
  while (i < a.s_.size() || j < b.s_.size()) {
    if (j == b.s_.size() ||
        (i < a.s_.size() && a.s_[i].slope < b.s_[j].slope)) {
      m.push_back(a.s_[i++]);
    } else if (i == a.s_.size() || b.s_[j].slope < a.s_[i].slope) {
      m.push_back(b.s_[j++]);
    } else {
      m.push_back({a.s_[i].slope, a.s_[i].mult + b.s_[j].mult});
      ++i;
      ++j;
    }
  }
  return NewtonPolygon(std::move(m));
}

std::string NewtonPolygon::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < s_.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(s_[i].slope) << ":" << rat_str(s_[i].mult);
  }
  return os.str();
}

Rat gauss_logval(const RobbaEl& x, const Rat& s) {
  if (s <= 0) throw domain_error("gauss_logval: s must be positive");
  if (x.is_zero()) throw domain_error("gauss_logval: zero element");
  const Rat c = x.cfg()->c();
  std::optional<Rat> best;
  for (long i = 0; i < x.len(); ++i) {
    auto v = coord_val(x.witt().coord(i));
    if (!v) continue;
    Rat line = Rat(i + x.shift()) + s * c * (*v);
    if (!best || line < *best) best = line;
  }
  return *best;
}

NewtonPolygon newton_polygon(const RobbaEl& x) {
  if (x.is_zero()) throw domain_error("newton_polygon: zero element");
  const Rat c = x.cfg()->c();
  struct Line {
    Rat b, m;  // value at s is b + m*s
    long idx;
  };
  // canonical form puts a nonzero coordinate at index 0, so intercepts
  // strictly increase along the scan
  std::vector<Line> env;
  auto cross = [](const Line& u, const Line& w) -> Rat {
    return (w.b - u.b) / (u.m - w.m);
  };
  for (long i = 0; i < x.len(); ++i) {
    auto v = coord_val(x.witt().coord(i));
    if (!v) continue;
    Line ln{Rat(i + x.shift()), c * (*v), i + x.shift()};
    if (!env.empty() && ln.m >= env.back().m) continue;  // dominated for s>0
    while (env.size() >= 2 &&
           cross(env.back(), ln) <= cross(env[env.size() - 2], env.back()))
      env.pop_back();
    env.push_back(std::move(ln));
  }
  std::vector<NewtonSlope> out;
  for (size_t k = 0; k + 1 < env.size(); ++k)
    out.push_back(
        {cross(env[k], env[k + 1]), Rat(env[k + 1].idx - env[k].idx)});
  return NewtonPolygon(std::move(out));
}

std::vector<Rat> convexity_profile(const RobbaEl& x,
                                   const std::vector<Rat>& s_grid) {
  for (size_t i = 0; i < s_grid.size(); ++i) {
    if (s_grid[i] <= 0)
      throw domain_error("convexity_profile: grid must be positive");
    if (i && s_grid[i - 1] >= s_grid[i])
      throw domain_error("convexity_profile: grid must ascend");
  }
  std::vector<Rat> out;
  out.reserve(s_grid.size());
  for (const Rat& s : s_grid) out.push_back(gauss_logval(x, s));
  return out;
}

std::pair<RobbaEl, RobbaEl> decompose(const RobbaEl& x, long n) {
  auto cfg = x.cfg();
  std::vector<PerfLaurent> hi((size_t)x.len(), PerfLaurent::zero(cfg));
  std::vector<PerfLaurent> lo = hi;
  for (long i = 0; i < x.len(); ++i) {
    if (i + x.shift() >= n)
      hi[(size_t)i] = x.witt().coord(i);
    else
      lo[(size_t)i] = x.witt().coord(i);
  }
  return {RobbaEl(WittPl(cfg, std::move(hi)), x.shift()),
          RobbaEl(WittPl(cfg, std::move(lo)), x.shift())};
}

std::pair<RobbaEl, RobbaEl> decompose_by_coeff_norm(const RobbaEl& x,
                                                    const Rat& c_thresh,
                                                    long a) {
  if (c_thresh <= 0 || c_thresh >= 1)
    throw domain_error("decompose_by_coeff_norm: threshold not in (0,1)");
  if (a < 1) throw domain_error("decompose_by_coeff_norm: a must be >= 1");
  auto cfg = x.cfg();
  const Rat c = cfg->c();
  std::vector<PerfLaurent> big((size_t)x.len(), PerfLaurent::zero(cfg));
  std::vector<PerfLaurent> small = big;
  for (long i = 0; i < x.len(); ++i) {
    auto v = coord_val(x.witt().coord(i));
    if (!v) continue;
    // alpha(t_i) = p^{-c v} >= c_thresh, compared exactly
    if (cmp_p_pow(cfg->p(), -c * (*v), c_thresh) >= 0)
      big[(size_t)i] = x.witt().coord(i);
    else
      small[(size_t)i] = x.witt().coord(i);
  }
  return {RobbaEl(WittPl(cfg, std::move(big)), x.shift()),
          RobbaEl(WittPl(cfg, std::move(small)), x.shift())};
}

PerfLaurent artin_schreier_reduce(const PerfLaurent& x, const Rat& c_thresh,
                                  long d) {
  if (c_thresh <= 1)
    throw domain_error("artin_schreier_reduce: threshold must exceed 1");
  if (d < 1) throw domain_error("artin_schreier_reduce: d must be >= 1");
  auto cfg = x.cfg();
  if (x.is_zero()) {
    if (!x.is_exact())
      throw precision_error("artin_schreier_reduce: indeterminate input");
    return PerfLaurent::zero(cfg);
  }
  Rat v = x.v_pi().finite();
  if (v >= 0) return PerfLaurent::zero(cfg);  // alpha(x) <= 1 needs no move
  const Rat c = cfg->c();
  const Rat step = rat_pow_int(Rat(cfg->p()), -d);
  long m = 0;
  Rat scale(1);
  do {
    ++m;
    if (m * d > cfg->root_cap())
      throw domain_error("artin_schreier_reduce: root depth overflow");
    scale *= step;  // scale = p^{-md}
  } while (cmp_p_pow(cfg->p(), -c * v * scale, c_thresh) >= 0);
  PerfLaurent y = PerfLaurent::zero(cfg), r = x;
  for (long k = 1; k <= m; ++k) {
    for (long j = 0; j < d; ++j) r = r.pth_root();
    y = y - r;
  }
  return y;
}

}  // namespace wr
