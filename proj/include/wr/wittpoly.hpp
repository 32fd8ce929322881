#pragma once

#include <map>
#include <memory>
#include <vector>

#include "wr/rational.hpp"

namespace wr {

// Universal Witt coordinate polynomials in the genuine components of two
// operands x = (x_0..x_{N-1}), y = (y_0..y_{N-1}): sum polynomials S_n and
// product polynomials P~_n with w_n(S) = w_n(x) + w_n(y) and
// w_n(P~) = w_n(x) * w_n(y) over the integers.  The table stores the mod-p
// reductions; generation works over Z, verifies that every division by p^n
// in the ghost recursion is exact (a failure aborts: the identities are
// theorems), and verifies the isobaric grading of every monomial.
//
// Symbolic generation is exponential in nature; it exists as an anchor and
// cross-check, while the arithmetic path evaluates ghost components
// directly.  Lengths beyond the built-in caps raise a resource error.

// monomial exponents for variables x_0..x_{N-1}, y_0..y_{N-1}
using WpMono = std::vector<unsigned short>;

struct WpPoly {
  long nvars = 0;
  std::map<WpMono, long> t;  // coefficients in [0, p)
};

class WittPolyTable {
 public:
  long p() const { return p_; }
  long len() const { return N_; }

  const WpPoly& sum_poly(long n) const { return sum_.at((size_t)n); }
  const WpPoly& prod_poly(long n) const { return prod_.at((size_t)n); }

  // monomials of S_n with every variable other than x_0, y_0 set to zero,
  // as (a, b) -> coefficient; these are the Teichmuller carry polynomials
  // before the formal p^n-th root
  std::map<std::pair<long, long>, long> single_sum(long n) const;

  // every monomial of single_sum(n) has total degree exactly p^n, i.e. the
  // fractional carry polynomial P_n is homogeneous of degree 1
  bool single_sum_homogeneous(long n) const;

  // full isobaric grading: weight(x_i) = weight(y_i) = p^i; S_n monomials
  // have joint weight p^n, P~_n monomials have weight p^n in x and in y
  // separately (also enforced during generation)
  bool isobaric_ok() const;

  // evaluate S_n or P~_n at genuine components given in a ring C, embedding
  // integer coefficients via embed; used to cross-check the arithmetic path
  template <class C, class Embed>
  C eval(bool product, long n, const std::vector<C>& gx,
         const std::vector<C>& gy, Embed embed) const {
    const WpPoly& f = product ? prod_poly(n) : sum_poly(n);
    C acc = embed(0);
    for (const auto& [m, c] : f.t) {
      C term = embed(c);
      for (long i = 0; i < N_; ++i) {
        if (m[(size_t)i]) term = term * cpow(gx[(size_t)i], m[(size_t)i]);
        if (m[(size_t)(N_ + i)])
          term = term * cpow(gy[(size_t)i], m[(size_t)(N_ + i)]);
      }
      acc = acc + term;
    }
    return acc;
  }

  static std::shared_ptr<const WittPolyTable> make(long p, long N);

 private:
  template <class C>
  static C cpow(const C& b, unsigned long e) {
    C acc = b;
    for (unsigned long k = 1; k < e; ++k) acc = acc * b;
    return acc;
  }

  long p_ = 0, N_ = 0;
  std::vector<WpPoly> sum_, prod_;
  friend std::shared_ptr<const WittPolyTable> witt_polynomials(long, long);
};

// cached access; resource error beyond the per-prime length caps
std::shared_ptr<const WittPolyTable> witt_polynomials(long p, long N);

}  // namespace wr
