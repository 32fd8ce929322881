#include "wr/primitive.hpp"

#include <sstream>
#include <utility>

namespace wr {

namespace {

long p_pow_long(long p, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > 1000000000L / p) throw precision_error("p-power overflows the resource cap");
    r *= p;
  }
  return r;
}

long rat_ceil_long(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw precision_error("iteration cap overflows");
  return q.get_si();
}

// exponent denominator as a power of p; the series invariant guarantees
// the denominator is such a power
long denom_level(const Rat& e, long p) {
  Int den = e.get_den();
  long m = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)p)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), (unsigned long)p);
    ++m;
  }
  if (den != 1) throw std::logic_error("exponent denominator is not a p-power");
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// CycInt

CycInt::CycInt(long p, long K, long N) : p_(p), K_(K), N_(N) {
  if (p < 2 || K < 1 || N < 1) throw domain_error("CycInt: bad parameters");
  D_ = p_pow_long(p, K - 1) * (p - 1);
  if (D_ > 100000) throw precision_error("CycInt: cyclotomic degree beyond the resource cap");
  mod_ = p_pow_long(p, N);
  c_.assign((size_t)D_, 0);
}

CycInt CycInt::one(long p, long K, long N) {
  CycInt r(p, K, N);
  r.c_[0] = 1;
  return r;
}

CycInt CycInt::x_power(long p, long K, long N, unsigned long e) {
  CycInt r(p, K, N);
  if (e < (unsigned long)r.D_) {
    r.c_[(size_t)e] = 1;
    return r;
  }
  CycInt x(p, K, N);
  x.c_[1] = 1;
  return x.pow_ul(e);
}

CycInt CycInt::zeta(long p, long K, long N, long k) {
  if (k < 0 || k > K) throw domain_error("CycInt::zeta: order outside the truncation");
  unsigned long e = (unsigned long)p_pow_long(p, K - k);
  return x_power(p, K, N, e);
}

bool CycInt::is_zero() const {
  for (long v : c_)
    if (v != 0) return false;
  return true;
}

void CycInt::check(const CycInt& o) const {
  if (p_ != o.p_ || K_ != o.K_ || N_ != o.N_)
    throw domain_error("CycInt: mixed parameters");
}

std::vector<long> CycInt::reduce(std::vector<long> v) const {
  // Phi_{p^K}(x) = sum_{j<p} x^(j p^(K-1)), so
  // x^D = -(x^0 + x^(p^(K-1)) + ... + x^((p-2) p^(K-1)))
  long step = p_pow_long(p_, K_ - 1);
  for (size_t deg = v.size(); deg-- > (size_t)D_;) {
    long a = v[deg] % mod_;
    v[deg] = 0;
    if (a == 0) continue;
    for (long j = 0; j < p_ - 1; ++j) v[deg - (size_t)D_ + (size_t)(j * step)] -= a;
  }
  v.resize((size_t)D_);
  for (long& a : v) {
    a %= mod_;
    if (a < 0) a += mod_;
  }
  return v;
}

CycInt CycInt::operator+(const CycInt& o) const {
  check(o);
  CycInt r(p_, K_, N_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] + o.c_[i]) % mod_;
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
  check(o);
  CycInt r(p_, K_, N_);
  for (size_t i = 0; i < c_.size(); ++i)
    r.c_[i] = ((c_[i] - o.c_[i]) % mod_ + mod_) % mod_;
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(p_, K_, N_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = (mod_ - c_[i]) % mod_;
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  check(o);
  std::vector<long> v(2 * (size_t)D_ - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      v[i + j] = (v[i + j] + c_[i] * o.c_[j]) % mod_;
    }
  }
  CycInt r(p_, K_, N_);
  r.c_ = reduce(std::move(v));
  return r;
}

bool CycInt::operator==(const CycInt& o) const {
  check(o);
  return c_ == o.c_;
}

CycInt CycInt::pow_ul(unsigned long e) const {
  CycInt acc = one(p_, K_, N_), sq = *this;
  while (e > 0) {
    if (e & 1UL) acc = acc * sq;
    e >>= 1;
    if (e) sq = sq * sq;
  }
  return acc;
}

CycInt CycInt::scale(long a) const {
  a %= mod_;
  if (a < 0) a += mod_;
  CycInt r(p_, K_, N_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] * a) % mod_;
  return r;
}

std::string CycInt::str() const {
  std::ostringstream os;
  os << "cyc{p=" << p_ << ",K=" << K_ << ",N=" << N_ << "}[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// PrimitiveEl

bool is_primitive_deg1(const RobbaEl& z, std::string* diag) {
  auto fail = [&](const char* why) {
    if (diag) *diag = why;
    return false;
  };
  if (z.shift() > 0) return fail("leading Teichmuller coordinate vanishes");
  if (z.shift() < 0) return fail("negative p-shift lies outside W(o_L)");
  const WittPl& w = z.witt();
  const ConfigPtr& cfg = z.cfg();
  for (long i = 0; i < w.len(); ++i) {
    const PerfLaurent& t = w.coord(i);
    if (!t.is_zero()) {
      if (t.v_pi().finite() < Rat(0)) return fail("coordinate with negative valuation");
    } else if (!t.is_exact() && t.err().finite() < Rat(0)) {
      throw precision_error("primitive test: coordinate integrality indeterminate");
    }
  }
  const PerfLaurent& z0 = w.coord(0);
  if (z0.is_zero()) {
    if (z0.is_exact()) return fail("leading Teichmuller coordinate vanishes");
    throw precision_error("primitive test: leading coordinate indeterminate");
  }
  if (cfg->c() * z0.v_pi().finite() != Rat(1))
    return fail("leading coordinate does not have Gauss weight p^-1");
  if (w.len() < 2) return fail("second coordinate is not a unit of o_L");
  const PerfLaurent& z1 = w.coord(1);
  if (z1.is_zero()) {
    if (z1.is_exact()) return fail("second coordinate is not a unit of o_L");
    throw precision_error("primitive test: second coordinate indeterminate");
  }
  if (z1.v_pi().finite() != Rat(0))
    return fail("second coordinate is not a unit of o_L");
  if (diag) diag->clear();
  return true;
}

PrimitiveEl::PrimitiveEl(const RobbaEl& z) : cfg_(z.cfg()) {
  std::string diag;
  if (!is_primitive_deg1(z, &diag))
    throw domain_error("not primitive of degree 1: " + diag);
  long N = cfg_->witt_len();
  if (N < 2) throw domain_error("primitive division needs witt_len >= 2");
  z_ = z.witt();
  if (z_.len() > N) z_ = z_.truncate(N);
  if (z_.len() < N) z_ = z_.extend(N);
  zbar0_ = z_.coord(0);
  zbar1_ = z_.coord(1);
  s_ = (z_ - WittPl::teichmuller(cfg_, N, zbar0_)).div_by_p();
  w_ = s_.w_invert();
  PerfLaurent z0inv = zbar0_.inverse();
  pinv_ = -(WittPl::teichmuller(cfg_, N, z0inv) * s_);
  // p * pinv + [z_0^{-1}] z = 1 exactly; agreement failure means a bug
  WittPl lhs = pinv_.mul_by_p() + WittPl::teichmuller(cfg_, N, z0inv) * z_;
  if (!witt_agrees(lhs, WittPl::one(cfg_, N)))
    throw std::logic_error("primitive element: p-inverse identity failed");
}

PrimPtr PrimitiveEl::make(const RobbaEl& z) {
  return PrimPtr(new PrimitiveEl(z));
}

WittPl standard_cyclotomic_witt(const ConfigPtr& cfg, long n) {
  if (!cfg) throw domain_error("standard_cyclotomic: null config");
  if (cfg->root_cap() < 1)
    throw domain_error("standard_cyclotomic: root cap too small");
  if (n < 1) throw domain_error("standard_cyclotomic: bad length");
  long p = cfg->p();
  // root first, then take powers: every exponent stays below (p-1)/p, so
  // no window with win_hi >= 1 ever clips the telescoping identity
  PerfLaurent r = (PerfLaurent::one(cfg) + PerfLaurent::pi(cfg)).pth_root();
  WittPl z = WittPl::zero(cfg, n);
  PerfLaurent acc = PerfLaurent::one(cfg);
  for (long i = 0; i < p; ++i) {
    z = z + WittPl::teichmuller(cfg, n, acc);
    if (i + 1 < p) acc = acc * r;
  }
  // the geometric sum telescopes: the leading coordinate is pi^((p-1)/p)
  PerfLaurent want =
      PerfLaurent::monomial(cfg, make_rat(p - 1, p), FqElem::one(cfg->fq()));
  if (z.coord(0) != want)
    throw std::logic_error("standard cyclotomic: leading coordinate mismatch");
  return z;
}

PrimPtr PrimitiveEl::standard_cyclotomic(ConfigPtr cfg) {
  if (!cfg) throw domain_error("standard_cyclotomic: null config");
  long N = cfg->witt_len();
  if (N < 2) throw domain_error("primitive division needs witt_len >= 2");
  return make(RobbaEl(standard_cyclotomic_witt(cfg, N), 0));
}

bool PrimitiveEl::same(const PrimitiveEl& o) const {
  return this == &o || (cfg_->same(*o.cfg_) && z_ == o.z_);
}

bool witt_agrees(const WittPl& a, const WittPl& b) {
  if (a.len() != b.len()) return false;
  for (long i = 0; i < a.len(); ++i)
    if (!a.coord(i).agrees(b.coord(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// reduction

namespace {

// canonicity of a representative, decided from the stored coordinates.
//
//  - canonical: the leading coordinate has terms and dominates.  Stored
//    terms must obey the normal form v_pi(y_i) >= v_pi(y_0); an inexact
//    zero at coordinate i is acceptable whenever its unknown content cannot
//    outweigh the lead, i.e. i + c err_i >= c v_0 on the weighted scale
//    (coordinate i enters the class with an extra factor of p).
//  - iterate: a stored term still sits below the lead, or the lead itself
//    is an inexact zero next to nonzero coordinates; another division step
//    can genuinely move that content.
//  - stuck: the lead has terms but some later coordinate is an empty
//    inexact zero whose unknown content could dominate it.  Nothing stored
//    can reappear below an error floor (terms at or above the floor are
//    dropped by construction), and the floors only sink as the drain runs,
//    so further steps just churn until the cap trips.
enum class RepState { kCanonical, kIterate, kStuck };

RepState classify_rep(const WittPl& y) {
  bool all_zero = true;
  for (long i = 0; i < y.len(); ++i)
    if (!y.coord(i).is_zero()) {
      all_zero = false;
      break;
    }
  if (all_zero) return RepState::kCanonical;
  const PerfLaurent& y0 = y.coord(0);
  if (y0.is_zero()) return RepState::kIterate;
  const Rat& c = y.cfg()->c();
  Rat cv0 = c * y0.v_pi().finite();
  bool stuck = false;
  for (long i = 1; i < y.len(); ++i) {
    const PerfLaurent& t = y.coord(i);
    if (!t.is_zero()) {
      if (c * t.v_pi().finite() < cv0) return RepState::kIterate;
    } else if (!t.is_exact() && Rat(i) + c * t.err().finite() < cv0) {
      stuck = true;
    }
  }
  return stuck ? RepState::kStuck : RepState::kCanonical;
}

bool canonical_rep(const WittPl& y) {
  return classify_rep(y) == RepState::kCanonical;
}

// honest value of a stuck representative: the class is only known to be
// small, so drop every stored term into the error bounds.  This claims
// strictly less than the input did, hence stays sound, and it terminates
// the drain instead of deepening root denominators until the cap trips.
WittPl collapse_rep(const WittPl& y) {
  std::vector<PerfLaurent> co;
  co.reserve(y.len());
  for (long i = 0; i < y.len(); ++i) {
    const PerfLaurent& t = y.coord(i);
    co.push_back(t.is_zero() ? t : t.with_error(t.v_pi().finite()));
  }
  return WittPl(y.cfg(), std::move(co));
}

// one step  x <- x - w ((x - [x_0])/p) z,  quotient accumulated into u
void reduce_step(const PrimitiveEl& pz, WittPl& x, WittPl& u) {
  const ConfigPtr& cfg = pz.cfg();
  WittPl d =
      (x - WittPl::teichmuller(cfg, x.len(), x.coord(0))).div_by_p();
  WittPl wd = pz.w() * d;
  u = u + wd;
  x = x - wd * pz.z();
}

long default_cap(const WittPl& x) {
  const ConfigPtr& cfg = x.cfg();
  Rat worst(0);
  for (long i = 0; i < x.len(); ++i) {
    const PerfLaurent& t = x.coord(i);
    if (t.is_zero()) continue;
    Rat v = t.v_pi().finite();
    Rat mag = v < Rat(0) ? Rat(-v) : v;
    if (mag > worst) worst = mag;
  }
  return 4 * cfg->witt_len() * (1 + rat_ceil_long(worst * cfg->c()));
}

// known lower bound for c * v_pi of a coordinate (infinite for exact zero)
Val coord_logval_lb(const PerfLaurent& t, const Rat& c) {
  if (!t.is_zero()) return Val(c * t.v_pi().finite());
  if (t.is_exact()) return Val::infinity();
  return Val(c * t.err().finite());
}

// x as an element of W_N congruent to the class of the RobbaEl: positive
// shifts multiply by p inside W_N, negative shifts multiply by the cached
// representative of p^{-1}
WittPl lift_to_wn(const RobbaEl& x, const PrimitiveEl& pz) {
  if (!x.cfg() || !x.cfg()->same(*pz.cfg()))
    throw domain_error("reduce_mod_z: mixed configs");
  long N = pz.cfg()->witt_len();
  WittPl w = x.witt();
  if (w.len() > N) w = w.truncate(N);
  if (w.len() < N) w = w.extend(N);
  long e = x.shift();
  for (long i = 0; i < e && i < N; ++i) w = w.mul_by_p();
  if (e < 0) w = w * pz.p_inverse().pow_int(-e);
  return w;
}

struct RedParts {
  WittPl y, u;
};

// iterate until done(y) holds, accumulating the quotient
template <class Done>
RedParts run_reduction(const PrimitiveEl& pz, const WittPl& xw, long cap,
                       Done done, const char* overrun) {
  WittPl cur = xw, u = WittPl::zero(pz.cfg(), xw.len());
  long it = 0;
  while (!done(cur)) {
    if (it++ >= cap) throw precision_error(overrun);
    reduce_step(pz, cur, u);
  }
  return {std::move(cur), std::move(u)};
}

// plain reduction: stop on a canonical representative, or collapse a stuck
// one to the inexact zero it denotes
RedParts run_plain(const PrimitiveEl& pz, const WittPl& xw, long cap,
                   const char* overrun) {
  WittPl cur = xw, u = WittPl::zero(pz.cfg(), xw.len());
  long it = 0;
  for (;;) {
    RepState st = classify_rep(cur);
    if (st == RepState::kCanonical) break;
    if (st == RepState::kStuck) {
      cur = collapse_rep(cur);
      break;
    }
    if (it++ >= cap) throw precision_error(overrun);
    reduce_step(pz, cur, u);
  }
  return {std::move(cur), std::move(u)};
}

}  // namespace

QuotientEl::QuotientEl(PrimPtr prim, WittPl x, WittPl y, WittPl u)
    : prim_(std::move(prim)),
      x_(std::move(x)),
      y_(std::move(y)),
      u_(std::move(u)) {
  // witness: the stored values satisfy x = y + u z coordinate for
  // coordinate; a mismatch means the reduction itself is broken
  if (!witt_agrees(x_, y_ + u_ * prim_->z()))
    throw std::logic_error("quotient reduction: division witness failed");
  const PerfLaurent& y0 = y_.coord(0);
  if (!y0.is_zero()) {
    logval_ = Val(prim_->cfg()->c() * y0.v_pi().finite());
  } else {
    bool all_exact = true;
    for (long i = 0; i < y_.len(); ++i)
      if (!y_.coord(i).is_zero() || !y_.coord(i).is_exact()) {
        all_exact = false;
        break;
      }
    norm_known_ = all_exact;  // exactly zero: norm 0; else indeterminate
  }
}

bool QuotientEl::is_zero_rep() const {
  for (long i = 0; i < y_.len(); ++i)
    if (!y_.coord(i).is_zero()) return false;
  return true;
}

Val QuotientEl::logval() const {
  if (!norm_known_)
    throw precision_error("quotient norm indeterminate at this precision");
  return logval_;
}

std::string QuotientEl::str() const {
  std::ostringstream os;
  os << "class[" << y_.str() << " mod z, logval=";
  if (!norm_known_)
    os << "indeterminate";
  else
    os << logval_.str();
  os << "]";
  return os.str();
}

QuotientEl reduce_mod_z(const RobbaEl& x, const PrimPtr& z, long iter_cap) {
  if (!z) throw domain_error("reduce_mod_z: null primitive element");
  WittPl xw = lift_to_wn(x, *z);
  long cap = iter_cap > 0 ? iter_cap : default_cap(xw);
  RedParts r = run_plain(
      *z, xw, cap, "reduce_mod_z did not converge within the iteration cap");
  return QuotientEl(z, std::move(xw), std::move(r.y), std::move(r.u));
}

QuotientEl reduce_mod_z_refined(const RobbaEl& x, const PrimPtr& z,
                                const Rat& eps_logval, long m, long iter_cap) {
  if (!z) throw domain_error("reduce_mod_z: null primitive element");
  if (m < 0) throw domain_error("reduce_mod_z_refined: negative step count");
  const ConfigPtr& cfg = z->cfg();
  Rat gap(0);
  for (long k = 1; k <= m; ++k) gap += rat_pow_int(Rat(cfg->p()), -k);
  WittPl xw = lift_to_wn(x, *z);
  long cap = (iter_cap > 0 ? iter_cap : default_cap(xw)) + 2 * m;
  // done when canonicity holds together with the refined bound
  //   logval(y_1) >= min(logval(y_0) + gap, eps_logval)
  auto refined_ok = [&](const WittPl& y) {
    if (!canonical_rep(y)) return false;
    const PerfLaurent& y0 = y.coord(0);
    if (y0.is_zero()) return true;  // zero representative, bounds vacuous
    Rat lv0 = cfg->c() * y0.v_pi().finite();
    Rat thr = lv0 + gap;
    if (eps_logval < thr) thr = eps_logval;
    Val lb1 = coord_logval_lb(y.coord(1), cfg->c());
    return lb1.is_inf() || !(lb1.finite() < thr);
  };
  RedParts r = run_reduction(
      *z, xw, cap, refined_ok,
      "reduce_mod_z_refined did not converge within the iteration cap");
  return QuotientEl(z, std::move(xw), std::move(r.y), std::move(r.u));
}

namespace {

void check_same_prim(const QuotientEl& a, const QuotientEl& b) {
  if (!a.prim()->same(*b.prim()))
    throw domain_error("quotient arithmetic: different primitive elements");
}

constexpr const char* kArithOverrun =
    "quotient arithmetic did not converge within the iteration cap";

}  // namespace

QuotientEl q_add(const QuotientEl& a, const QuotientEl& b) {
  check_same_prim(a, b);
  WittPl xw = a.rep() + b.rep();
  RedParts r = run_plain(*a.prim(), xw, default_cap(xw), kArithOverrun);
  return QuotientEl(a.prim(), std::move(xw), std::move(r.y), std::move(r.u));
}

QuotientEl q_neg(const QuotientEl& a) {
  WittPl xw = -a.rep();
  RedParts r = run_plain(*a.prim(), xw, default_cap(xw), kArithOverrun);
  return QuotientEl(a.prim(), std::move(xw), std::move(r.y), std::move(r.u));
}

QuotientEl q_mul(const QuotientEl& a, const QuotientEl& b) {
  check_same_prim(a, b);
  WittPl xw = a.rep() * b.rep();
  RedParts r = run_plain(*a.prim(), xw, default_cap(xw), kArithOverrun);
  return QuotientEl(a.prim(), std::move(xw), std::move(r.y), std::move(r.u));
}

QuotientEl q_invert(const QuotientEl& a, long iter_cap) {
  const ConfigPtr& cfg = a.prim()->cfg();
  long N = cfg->witt_len();
  const PerfLaurent& y0 = a.rep().coord(0);
  if (y0.is_zero()) {
    if (a.is_zero_rep() && a.norm_known())
      throw domain_error("q_invert: zero class");
    throw precision_error(
        "q_invert: leading coordinate indeterminate at this precision");
  }
  WittPl one_w = WittPl::one(cfg, N);
  RedParts r1 = run_plain(*a.prim(), one_w, default_cap(one_w), kArithOverrun);
  QuotientEl one_c(a.prim(), std::move(one_w), std::move(r1.y), std::move(r1.u));
  WittPl u0 = WittPl::teichmuller(cfg, N, y0.inverse());
  RedParts r2 = run_plain(*a.prim(), u0, default_cap(u0), kArithOverrun);
  QuotientEl u(a.prim(), std::move(u0), std::move(r2.y), std::move(r2.u));
  long cap = iter_cap > 0 ? iter_cap : 2 * N + 16;
  for (long it = 0; it < cap; ++it) {
    QuotientEl r = q_add(one_c, q_neg(q_mul(a, u)));
    if (r.is_zero_rep()) return u;
    QuotientEl next = q_add(u, q_mul(u, r));
    // the residual deepens quadratically while the error floor of u stays
    // put, so the update eventually falls entirely below the errors; that
    // fixed point is convergence at working precision
    if (witt_agrees(next.rep(), u.rep())) return next;
    u = std::move(next);
  }
  throw precision_error("q_invert did not converge within the iteration cap");
}

// ---------------------------------------------------------------------------
// theta and the tilt

CycInt theta_cyc(const RobbaEl& x, long K) {
  const ConfigPtr& cfg = x.cfg();
  if (!cfg) throw domain_error("theta_cyc: invalid element");
  if (cfg->d() != 1)
    throw domain_error("theta_cyc: needs a prime coefficient field");
  long p = cfg->p(), N = cfg->witt_len(), e = x.shift();
  if (e < 0) throw domain_error("theta_cyc: negative p-shift is outside W(o_L)");
  struct Item {
    long j;
    PerfLaurent g;
  };
  std::vector<Item> items;
  long Mp = 0;
  for (long i = 0; i < x.len(); ++i) {
    long j = i + e;
    if (j >= N) break;
    PerfLaurent t = x.witt().coord(i);
    if (!t.is_exact())
      throw precision_error("theta_cyc: inexact coordinate");
    if (t.is_zero()) continue;
    for (long r = 0; r < N - 1 - j; ++r) t = t.pth_root();
    for (const auto& [ex, c] : t.terms()) {
      if (ex < Rat(0))
        throw domain_error(
            "theta_cyc: negative pi-exponent obstructs the cyclotomic rewrite");
      long m = denom_level(ex, p);
      if (m > Mp) Mp = m;
    }
    items.push_back({j, std::move(t)});
  }
  if (K == 0) K = Mp + N;
  if (K < Mp || K < 1)
    throw domain_error("theta_cyc: K too small for the root depth");
  CycInt acc = CycInt::zero(p, K, N);
  CycInt base = CycInt::zeta(p, K, N, Mp) - CycInt::one(p, K, N);
  Rat scale = rat_pow_int(Rat(p), Mp);
  for (const auto& item : items) {
    CycInt g = CycInt::zero(p, K, N);
    for (const auto& [ex, c] : item.g.terms()) {
      Rat a = ex * scale;
      if (a.get_den() != 1 || !a.get_num().fits_ulong_p())
        throw std::logic_error("theta_cyc: exponent rewrite failed");
      g = g + base.pow_ul(a.get_num().get_ui()).scale(c.coeffs()[0]);
    }
    unsigned long lift_pow = (unsigned long)p_pow_long(p, N - 1 - item.j);
    acc = acc + g.pow_ul(lift_pow).scale(p_pow_long(p, item.j));
  }
  return acc;
}

PerfLaurent mod_p_tilt_check(const QuotientEl& a) {
  const WittPl& y = a.rep();
  for (long i = 0; i < y.len(); ++i) {
    const PerfLaurent& t = y.coord(i);
    if (!t.is_zero()) {
      if (t.v_pi().finite() < Rat(0))
        throw domain_error("mod_p_tilt_check: representative not integral");
    } else if (!t.is_exact() && t.err().finite() < Rat(0)) {
      throw precision_error("mod_p_tilt_check: integrality indeterminate");
    }
  }
  Rat thr = a.prim()->zbar0().v_pi().finite();
  return y.coord(0).split_at(thr).first.with_error(thr);
}

}  // namespace wr
