#pragma once

#include <sstream>
#include <stdexcept>
#include <vector>

#include "wr/lift.hpp"

namespace wr {

namespace detail {

template <class C>
struct WittTraits;

template <>
struct WittTraits<FqElem> {
  using LiftT = ZqEl;
  static FqElem make_zero(const ConfigPtr& cfg) {
    return FqElem::zero(cfg->fq());
  }
  static FqElem make_one(const ConfigPtr& cfg) { return FqElem::one(cfg->fq()); }
  static LiftT lift(const FqElem& c, const ZqCtxPtr& z) {
    return ZqEl::lift_of(c, z);
  }
  static FqElem reduce(const LiftT& v, const ConfigPtr& cfg) {
    return v.reduce(cfg->fq());
  }
  static Val err_of(const FqElem&) { return Val::infinity(); }
  static Val val_of(const FqElem&) { return Val::infinity(); }
  static FqElem with_err(FqElem c, const Val&) { return c; }
  static FqElem invert(const FqElem& c) { return c.inverse(); }
  static bool compatible(const FqElem& c, const ConfigPtr& cfg) {
    return c.ctx() && c.ctx()->same(*cfg->fq());
  }
};

template <>
struct WittTraits<PerfLaurent> {
  using LiftT = LiftSeries;
  static PerfLaurent make_zero(const ConfigPtr& cfg) {
    return PerfLaurent::zero(cfg);
  }
  static PerfLaurent make_one(const ConfigPtr& cfg) {
    return PerfLaurent::one(cfg);
  }
  static LiftT lift(const PerfLaurent& c, const ZqCtxPtr& z) {
    return LiftSeries::lift_of(c, z);
  }
  static PerfLaurent reduce(const LiftT& v, const ConfigPtr& cfg) {
    return v.reduce(cfg);
  }
  static Val err_of(const PerfLaurent& c) { return c.err(); }
  static Val val_of(const PerfLaurent& c) { return c.v_pi(); }
  static PerfLaurent with_err(PerfLaurent c, const Val& e) {
    return e.is_inf() ? c : c.with_error(e.finite());
  }
  static PerfLaurent invert(const PerfLaurent& c) { return c.inverse(); }
  static bool compatible(const PerfLaurent& c, const ConfigPtr& cfg) {
    return c.cfg() && c.cfg()->same(*cfg);
  }
};

}  // namespace detail

// Truncated Witt vector x = sum_{i<N} p^i [t_i] over a perfect coefficient
// ring C, stored by its Teichmuller coordinates t_i.  The representation is
// faithful: the genuine Witt components are x_i = t_i^(p^i), and the
// triangular change of coordinates is invertible because C is perfect.
//
// Ring operations evaluate ghost components w_n = sum_{i<=n} p^i t_i^(p^n)
// in a torsion-free lift of C, solve for the result's genuine components by
// the exact recursion  X_n = (target_n - sum_{i<n} p^i X_i^(p^(n-i))) / p^n,
// and reduce back.  The divisions are exact for every choice of lift (the
// recursion reproduces the universal Witt polynomials evaluated at the
// lifts), so a failed division aborts: it can only mean a bug.
//
// Coefficient error terms propagate through an operation as one error per
// coordinate.  Solving back through the V-filtration roots the coordinate
// formulas, so garbage of level e in input coordinate j can surface in
// output coordinate n >= j as low as level e / p^(n-j) (the surviving
// monomials of the recursion carry delta^m with p^j | m); the bound below
// minimizes over sources and monomial endpoints, with degree slack for
// negative-valuation cofactors.  Coarse but sound.
template <class C>
class WittEl {
  using Traits = detail::WittTraits<C>;
  using LiftT = typename Traits::LiftT;

 public:
  WittEl() = default;  // invalid until assigned
  WittEl(ConfigPtr cfg, std::vector<C> coords)
      : cfg_(std::move(cfg)), c_(std::move(coords)) {
    if (!cfg_) throw domain_error("WittEl: null config");
    if (c_.empty() || (long)c_.size() > 30)
      throw domain_error("WittEl: length out of range");
    for (const auto& t : c_)
      if (!Traits::compatible(t, cfg_))
        throw domain_error("WittEl: coordinate from wrong ring");
  }

  static WittEl zero(ConfigPtr cfg, long N) {
    return WittEl(cfg, std::vector<C>((size_t)N, Traits::make_zero(cfg)));
  }
  static WittEl teichmuller(ConfigPtr cfg, long N, const C& t) {
    WittEl x = zero(cfg, N);
    x.c_[0] = t;
    return x;
  }
  static WittEl one(ConfigPtr cfg, long N);
  // image of the integer a under Z -> W_N (a mod p^N)
  static WittEl from_int(ConfigPtr cfg, long N, Int a);

  const ConfigPtr& cfg() const { return cfg_; }
  long len() const { return (long)c_.size(); }
  const std::vector<C>& coords() const { return c_; }
  const C& coord(long i) const { return c_.at((size_t)i); }

  bool is_zero() const {
    for (const auto& t : c_)
      if (!t.is_zero()) return false;
    return true;
  }

  WittEl operator+(const WittEl& o) const {
    return ghost_op(Op::add, *this, o);
  }
  WittEl operator-(const WittEl& o) const {
    return ghost_op(Op::sub, *this, o);
  }
  WittEl operator*(const WittEl& o) const {
    return ghost_op(Op::mul, *this, o);
  }
  WittEl operator-() const {
    if (cfg_->p() != 2) {
      std::vector<C> t = c_;
      for (auto& x : t) x = -x;
      return WittEl(cfg_, std::move(t));
    }
    return ghost_op(Op::neg, *this, *this);
  }
  bool operator==(const WittEl& o) const {
    check(o);
    return c_ == o.c_;
  }
  bool operator!=(const WittEl& o) const { return !(*this == o); }

  // p * x: Teichmuller coordinates shift up one slot
  WittEl mul_by_p() const {
    std::vector<C> t(c_.size(), Traits::make_zero(cfg_));
    for (size_t i = 0; i + 1 < c_.size(); ++i) t[i + 1] = c_[i];
    return WittEl(cfg_, std::move(t));
  }
  // x / p for x with zero leading coordinate (within precision); the lost
  // coordinate's error bound, if any, is folded into every result error
  WittEl div_by_p() const {
    if (!c_[0].is_zero())
      throw domain_error("div_by_p: leading coordinate nonzero");
    Val e0 = Traits::err_of(c_[0]);
    Val m(0);
    for (const auto& t : c_) m = min(m, Traits::val_of(t));
    std::vector<C> t(c_.size(), Traits::make_zero(cfg_));
    for (size_t i = 1; i < c_.size(); ++i) {
      Val extra = e0 + (p_pow((long)i) - 1) * min(m, Val(0));
      t[i - 1] = Traits::with_err(c_[i], extra);
    }
    return WittEl(cfg_, std::move(t));
  }

  // functorial Frobenius lift: coordinates to the p-th power
  WittEl frobenius() const {
    std::vector<C> t = c_;
    for (auto& x : t) x = x.pth_power();
    return WittEl(cfg_, std::move(t));
  }
  WittEl inv_frobenius() const {
    std::vector<C> t = c_;
    for (auto& x : t) x = x.pth_root();
    return WittEl(cfg_, std::move(t));
  }

  // inverse of a unit (leading coordinate invertible) by Newton iteration;
  // coordinate n of the inverse only depends on coordinates <= n of the
  // input, so each doubling round runs at the shortest sufficient length
  WittEl w_invert() const {
    if (c_[0].is_zero()) throw domain_error("w_invert: not a unit");
    WittEl v = teichmuller(cfg_, 1, Traits::invert(c_[0]));
    long correct = 1;
    while (correct < len()) {
      long m = std::min(2 * correct, len());
      v = v.extend(m);
      WittEl xm = truncate(m);
      v = v * (from_int(cfg_, m, Int(2)) - xm * v);
      correct *= 2;
    }
    return v;
  }

  WittEl pow_int(long e) const {
    if (e < 0) throw domain_error("pow_int: negative exponent");
    WittEl acc = one(cfg_, len()), sq = *this;
    while (e > 0) {
      if (e & 1) acc = acc * sq;
      e >>= 1;
      if (e) sq = sq * sq;
    }
    return acc;
  }

  // ring surjection W_N -> W_n (drop high coordinates), n <= N
  WittEl truncate(long n) const {
    if (n < 1 || n > len()) throw domain_error("truncate: bad length");
    return WittEl(cfg_, std::vector<C>(c_.begin(), c_.begin() + n));
  }
  // one choice of preimage along W_n -> W_N: append zero coordinates
  WittEl extend(long n) const {
    if (n < len()) throw domain_error("extend: bad length");
    std::vector<C> t = c_;
    t.resize((size_t)n, Traits::make_zero(cfg_));
    return WittEl(cfg_, std::move(t));
  }

  std::string str() const {
    std::ostringstream os;
    os << "witt{" << len() << "}[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) os << "; ";
      os << c_[i].str();
    }
    os << "]";
    return os.str();
  }

 private:
  enum class Op { add, sub, mul, neg };

  void check(const WittEl& o) const {
    if (!cfg_ || !o.cfg_ || !cfg_->same(*o.cfg_))
      throw domain_error("WittEl: incompatible configs");
    if (c_.size() != o.c_.size())
      throw domain_error("WittEl: incompatible lengths");
  }

  Rat p_pow(long n) const {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), (unsigned long)cfg_->p(), (unsigned long)n);
    return Rat(v);
  }

  static WittEl ghost_op(Op op, const WittEl& x, const WittEl& y) {
    x.check(y);
    const ConfigPtr& cfg = x.cfg_;
    long N = x.len(), p = cfg->p();
    auto zc = ZqCtx::from(*cfg->fq());
    std::vector<LiftT> ax, ay;
    for (long i = 0; i < N; ++i) {
      ax.push_back(Traits::lift(x.c_[(size_t)i], zc));
      if (op == Op::mul || op == Op::add || op == Op::sub)
        ay.push_back(Traits::lift(y.c_[(size_t)i], zc));
    }
    std::vector<LiftT> B;  // B[i] = X_i^(p^(n-i)) at level n
    std::vector<C> out;
    std::vector<Val> errs;  // per-coordinate input error, min over operands
    Val min_val(0);
    for (long n = 0; n < N; ++n) {
      if (n > 0) {
        for (auto& a : ax) a = a.pow_ul((unsigned long)p);
        for (auto& a : ay) a = a.pow_ul((unsigned long)p);
        for (auto& b : B) b = b.pow_ul((unsigned long)p);
      }
      // ghost targets at level n
      LiftT gx = ax[0].mul_p_pow(0);
      for (long i = 1; i <= n; ++i) gx = gx + ax[(size_t)i].mul_p_pow(i);
      LiftT target;
      if (op == Op::neg) {
        target = -gx;
      } else {
        LiftT gy = ay[0].mul_p_pow(0);
        for (long i = 1; i <= n; ++i) gy = gy + ay[(size_t)i].mul_p_pow(i);
        target = op == Op::add   ? gx + gy
                 : op == Op::sub ? gx - gy
                                 : gx * gy;
      }
      for (long i = 0; i < n; ++i) target = target - B[(size_t)i].mul_p_pow(i);
      auto quot = target.div_p_pow(n);
      if (!quot)
        throw std::logic_error("WittEl: ghost recursion division not exact");
      B.push_back(*quot);
      // reduce the genuine component and take its p^n-th root
      C comp = Traits::reduce(B.back(), cfg);
      for (long k = 0; k < n; ++k) comp = comp.pth_root();
      // error bound: garbage of level e_j in input coordinate j survives
      // the p^n division and mod-p reduction only in monomials delta^m
      // with p^j | m, so after the closing p^n-th root it sits at level
      // (m e_j + (D - m) min(min_val, 0)) / p^n for m in [p^j, p^n], D the
      // total degree of the coordinate formula; minimize over endpoints
      Val en = Traits::err_of(x.c_[(size_t)n]);
      min_val = min(min_val, Traits::val_of(x.c_[(size_t)n]));
      if (op != Op::neg) {
        en = min(en, Traits::err_of(y.c_[(size_t)n]));
        min_val = min(min_val, Traits::val_of(y.c_[(size_t)n]));
      }
      errs.push_back(en);
      Rat pn = x.p_pow(n);
      Rat Dtot = op == Op::mul ? Rat(2) * pn : pn;
      Rat mv0 = min(min_val, Val(0)).is_inf() ? Rat(0)
                                              : min(min_val, Val(0)).finite();
      Val e = Val::infinity();
      for (long j = 0; j <= n; ++j) {
        if (errs[(size_t)j].is_inf()) continue;
        Rat ej = errs[(size_t)j].finite();
        Rat pj = x.p_pow(j);
        Rat candA = (pj * ej + (Dtot - pj) * mv0) / pn;
        Rat candB = ej + (Dtot - pn) * mv0 / pn;
        e = min(e, Val(candA < candB ? candA : candB));
      }
      out.push_back(Traits::with_err(std::move(comp), e));
    }
    return WittEl(cfg, std::move(out));
  }

  ConfigPtr cfg_;
  std::vector<C> c_;
};

template <class C>
WittEl<C> WittEl<C>::one(ConfigPtr cfg, long N) {
  WittEl x = zero(cfg, N);
  x.c_[0] = Traits::make_one(cfg);
  return x;
}

template <class C>
WittEl<C> WittEl<C>::from_int(ConfigPtr cfg, long N, Int a) {
  Int pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), (unsigned long)cfg->p(), (unsigned long)N);
  a %= pn;
  if (a < 0) a += pn;
  WittEl x = zero(cfg, N);
  WittEl o = one(cfg, N);
  for (long b = (long)mpz_sizeinbase(a.get_mpz_t(), 2) - 1; b >= 0; --b) {
    x = x + x;
    if (mpz_tstbit(a.get_mpz_t(), (mp_bitcnt_t)b)) x = x + o;
  }
  return x;
}

using WittFq = WittEl<FqElem>;
using WittPl = WittEl<PerfLaurent>;

}  // namespace wr
