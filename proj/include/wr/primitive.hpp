#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wr/robba.hpp"

namespace wr {

// Element of Z[x]/(Phi_{p^K}(x), p^N) in the power basis of the p^K-th
// cyclotomic polynomial, coefficients reduced to [0, p^N).  This is the
// truncated ring of integers of the cyclotomic target of theta.
class CycInt {
 public:
  CycInt(long p, long K, long N);  // the zero element

  static CycInt zero(long p, long K, long N) { return CycInt(p, K, N); }
  static CycInt one(long p, long K, long N);
  // class of x^e, e >= 0
  static CycInt x_power(long p, long K, long N, unsigned long e);
  // zeta_{p^k} = x^(p^(K-k)), 0 <= k <= K
  static CycInt zeta(long p, long K, long N, long k);

  long p() const { return p_; }
  long K() const { return K_; }
  long N() const { return N_; }
  long modulus() const { return mod_; }
  long degree() const { return D_; }
  const std::vector<long>& coeffs() const { return c_; }
  bool is_zero() const;

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  bool operator==(const CycInt& o) const;
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  CycInt pow_ul(unsigned long e) const;
  CycInt scale(long a) const;  // multiply by the integer a

  std::string str() const;

 private:
  void check(const CycInt& o) const;
  // fold degrees >= D with x^D = -(1 + x^(p^(K-1)) + ... ), then mod p^N
  std::vector<long> reduce(std::vector<long> v) const;

  long p_, K_, N_, D_, mod_;
  std::vector<long> c_;
};

class PrimitiveEl;
using PrimPtr = std::shared_ptr<const PrimitiveEl>;

// z = sum p^i [z_i] in W_N(o_L) that is primitive of degree 1: the leading
// coordinate has Gauss weight exactly p^{-1} (c * v_pi(z_0) = 1) and z_1 is
// a unit of o_L.  Cached alongside: s = (z - [z_0]) / p, its inverse
// w = s^{-1} (the divisor used by reduction), and -[z_0^{-1}] s, which is
// congruent to p^{-1} modulo z.  Values are immutable; the caches are
// computed once at construction, to the precision the config window allows.
class PrimitiveEl {
 public:
  // validates the degree-1 conditions; domain_error with the diagnostic on
  // failure, precision_error when a valuation is indeterminate
  static PrimPtr make(const RobbaEl& z);
  // z = sum_{i<p} [pibar + 1]^{i/p}, the cyclotomic instance; its leading
  // coordinate collapses to pi^((p-1)/p) exactly
  static PrimPtr standard_cyclotomic(ConfigPtr cfg);

  const ConfigPtr& cfg() const { return cfg_; }
  const WittPl& z() const { return z_; }
  const PerfLaurent& zbar0() const { return zbar0_; }
  const PerfLaurent& zbar1() const { return zbar1_; }
  const WittPl& s() const { return s_; }
  const WittPl& w() const { return w_; }
  // representative of p^{-1} in the quotient: p * p_inverse() + [z_0^{-1}] z = 1
  const WittPl& p_inverse() const { return pinv_; }

  bool same(const PrimitiveEl& o) const;

 private:
  explicit PrimitiveEl(const RobbaEl& z);

  ConfigPtr cfg_;
  WittPl z_, s_, w_, pinv_;
  PerfLaurent zbar0_, zbar1_;
};

// the Witt vector sum_{i<p} [(pibar + 1)^{i/p}] in W_n without the division
// caches; useful where only the element itself is needed and the config
// window is too wide for the cached inverses to terminate quickly
WittPl standard_cyclotomic_witt(const ConfigPtr& cfg, long n);

// degree-1 test: e = 0, integral coordinates, c*v_pi(z_0) = 1, z_1 a unit.
// On failure *diag names the condition that failed.  precision_error when
// an inexact zero coordinate makes the answer indeterminate.
bool is_primitive_deg1(const RobbaEl& z, std::string* diag = nullptr);

// coordinate-wise agreement of two Witt vectors within the coarser of the
// stored coefficient errors (the equality that survives inexact caches)
bool witt_agrees(const WittPl& a, const WittPl& b);

// Residue class modulo a primitive z, held by a canonical representative:
// v_pi(y_i) >= v_pi(y_0) for every i, so the quotient norm of the class is
// read off the leading coordinate.  Carries the witness quotient u and the
// lifted input x with x = y + u z as stored Witt vectors.
class QuotientEl {
 public:
  const PrimPtr& prim() const { return prim_; }
  const WittPl& rep() const { return y_; }
  const WittPl& witness_quotient() const { return u_; }
  const WittPl& lifted_input() const { return x_; }

  // every coordinate is zero to working precision
  bool is_zero_rep() const;
  // false when the representative vanishes to precision without being
  // exactly zero, so c*v_pi(y_0) cannot be read off
  bool norm_known() const { return norm_known_; }
  // c * v_pi(y_0); infinite for the exact zero class; precision_error when
  // the norm is indeterminate at this precision
  Val logval() const;

  std::string str() const;

 private:
  QuotientEl(PrimPtr prim, WittPl x, WittPl y, WittPl u);

  friend QuotientEl reduce_mod_z(const RobbaEl&, const PrimPtr&, long);
  friend QuotientEl reduce_mod_z_refined(const RobbaEl&, const PrimPtr&,
                                         const Rat&, long, long);
  friend QuotientEl q_add(const QuotientEl&, const QuotientEl&);
  friend QuotientEl q_neg(const QuotientEl&);
  friend QuotientEl q_mul(const QuotientEl&, const QuotientEl&);
  friend QuotientEl q_invert(const QuotientEl&, long);

  PrimPtr prim_;
  WittPl x_, y_, u_;
  bool norm_known_ = true;
  Val logval_ = Val::infinity();
};

// Division with canonical remainder: y = x - u z with the canonicity
// predicate on y.  Already-canonical inputs are returned unchanged.  The
// identity x = y + u z is re-verified before returning; iter_cap = 0 means
// the default cap 4 N (1 + |min v_pi| c).  precision_error when the cap is
// reached or canonicity is indeterminate.
QuotientEl reduce_mod_z(const RobbaEl& x, const PrimPtr& z, long iter_cap = 0);

// As reduce_mod_z, then keeps iterating until the refined bound
//   logval(y_1) >= min(logval(y_0) + sum_{k=1..m} p^{-k}, eps_logval)
// holds together with canonicity (m = 0 coincides with reduce_mod_z).
QuotientEl reduce_mod_z_refined(const RobbaEl& x, const PrimPtr& z,
                                const Rat& eps_logval, long m,
                                long iter_cap = 0);

// quotient arithmetic: lift the canonical representatives, operate in W_N,
// reduce again.  Both operands must be reduced against the same z.
QuotientEl q_add(const QuotientEl& a, const QuotientEl& b);
QuotientEl q_neg(const QuotientEl& a);
QuotientEl q_mul(const QuotientEl& a, const QuotientEl& b);
// Newton iteration from [y_0^{-1}]; domain_error on the zero class,
// precision_error when the leading coordinate is indeterminate or the
// iteration fails to close within the cap (0 = default)
QuotientEl q_invert(const QuotientEl& a, long iter_cap = 0);

// theta into Z[x]/(Phi_{p^K}, p^N) under the convention
// theta([(1+pibar)^(1/p^k)]) = zeta_{p^k}:
//   theta(sum p^i [t_i]) = sum p^i g_i(zeta_{p^M'})^(p^(N-1-i))
// where g_i rewrites t_i^(p^-(N-1-i)) as a polynomial in (1+pi)^(1/p^M')
// via pi^(a/p^j) = ((1+pi)^(1/p^j) - 1)^a.  K = 0 picks M' + N.  Requires a
// prime coefficient field, e >= 0, exact integral coordinates; domain_error
// when a negative exponent obstructs the rewrite or K is too small.
CycInt theta_cyc(const RobbaEl& x, long K = 0);

// reduction of the canonical representative into o_L/(z_0): the terms of
// y_0 below v_pi(z_0), with error pinned at v_pi(z_0).  domain_error when
// the representative is not integral.
PerfLaurent mod_p_tilt_check(const QuotientEl& a);

}  // namespace wr
