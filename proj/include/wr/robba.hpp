#pragma once

#include <utility>
#include <vector>

#include "wr/witt.hpp"

namespace wr {

// Bounded elements p^e * sum_i p^i [t_i] of the extended Robba rings over
// L = completed perfection of F_q((pi)), held in canonical form: a nonzero
// element has a nonzero lowest Teichmuller coordinate, so the p-shift e is
// the exact p-adic index of the first term.  Finite sums always satisfy the
// decay condition, so membership in the integral subrings reduces to sign
// checks on e and on the coordinate valuations.
//
// A stored value agrees with the element it denotes below p-adic index
// e + len; constructed inputs are exact, but the canonical expansion of a
// computed sum or product carries beyond any finite length, so results are
// truncations at the stored length.  Operations pick lengths wide enough
// that every Gauss-norm envelope line of the result survives (products use
// len1+len2-1), which is what the norm and polygon routines consume.  The
// flip side: re-aligning a computed value in a later mixed-shift addition
// pads with zeros above its precision, so chained sums agree only below
// the common precision of the intermediates (truncate_at compares there).
class RobbaEl {
 public:
  // takes ownership of w and strips leading zero coordinates into the shift
  explicit RobbaEl(WittPl w, long e = 0);

  static RobbaEl zero(ConfigPtr cfg, long n);
  static RobbaEl teichmuller(ConfigPtr cfg, long n, const PerfLaurent& t0);

  const ConfigPtr& cfg() const { return w_.cfg(); }
  const WittPl& witt() const { return w_; }
  long shift() const { return e_; }
  long len() const { return w_.len(); }
  bool is_zero() const { return w_.is_zero(); }

  // e >= 0, i.e. no negative powers of p
  bool in_integral() const { return e_ >= 0; }
  // W(o_L): additionally every coordinate valuation is >= 0
  bool in_plus() const;

  RobbaEl operator+(const RobbaEl& o) const;
  RobbaEl operator-(const RobbaEl& o) const;
  RobbaEl operator-() const;
  RobbaEl operator*(const RobbaEl& o) const;
  bool operator==(const RobbaEl& o) const;
  bool operator!=(const RobbaEl& o) const { return !(*this == o); }

  RobbaEl frobenius() const { return RobbaEl(w_.frobenius(), e_); }
  RobbaEl inv_frobenius() const { return RobbaEl(w_.inv_frobenius(), e_); }
  RobbaEl iterate_frobenius(long k) const;  // phi^k, k any integer

  // drop the coordinates of p-adic index >= prec
  RobbaEl truncate_at(long prec) const;

  std::string str() const;  // "p^e * witt{N}[...]"

 private:
  WittPl w_;
  long e_ = 0;
};

// Slopes of the Newton polygon of an element, kept strictly increasing.
// Multiplicity is the jump in the p-adic index between the two envelope
// lines meeting at the breakpoint.
struct NewtonSlope {
  Rat slope;
  Rat mult;
  bool operator==(const NewtonSlope& o) const {
    return slope == o.slope && mult == o.mult;
  }
};

class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  explicit NewtonPolygon(std::vector<NewtonSlope> s);

  const std::vector<NewtonSlope>& slopes() const { return s_; }
  bool empty() const { return s_.empty(); }
  bool operator==(const NewtonPolygon& o) const { return s_ == o.s_; }
  bool operator!=(const NewtonPolygon& o) const { return !(*this == o); }

  // multiset union: slopes of a product are the slopes of the factors
  static NewtonPolygon merge(const NewtonPolygon& a, const NewtonPolygon& b);

  std::string str() const;  // "slope:mult, slope:mult, ..."

 private:
  std::vector<NewtonSlope> s_;
};

// log_p Gauss valuation: lambda(alpha^s)(x) = p^{-gauss_logval(x, s)},
// computed as min_i (i + e + s * c * v_pi(t_i)) over nonzero coordinates
Rat gauss_logval(const RobbaEl& x, const Rat& s);

// breakpoints of s -> gauss_logval(x, s) over (0, infinity); empty for units
NewtonPolygon newton_polygon(const RobbaEl& x);

// gauss_logval sampled on an ascending positive grid; the negated sequence
// is convex
std::vector<Rat> convexity_profile(const RobbaEl& x,
                                   const std::vector<Rat>& s_grid);

// split x = y + z with y the terms of p-adic index >= n and z the rest;
// exact partition of the Teichmuller support
std::pair<RobbaEl, RobbaEl> decompose(const RobbaEl& x, long n);

// split x = y + z with y the terms whose coordinate norm alpha(t_i) =
// p^{-c v_pi(t_i)} is >= c_thresh, z the rest; 0 < c_thresh < 1
std::pair<RobbaEl, RobbaEl> decompose_by_coeff_norm(const RobbaEl& x,
                                                    const Rat& c_thresh,
                                                    long a);

// smallest y = -(x^{p^-d} + ... + x^{p^-md}) making alpha of the residual
// x - y + y^{p^d} = x^{p^-md} smaller than c_thresh (> 1); y = 0 when
// alpha(x) <= 1 already
PerfLaurent artin_schreier_reduce(const PerfLaurent& x, const Rat& c_thresh,
                                  long d);

}  // namespace wr
