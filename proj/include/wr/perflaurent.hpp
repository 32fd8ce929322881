#pragma once

#include <map>
#include <optional>
#include <string>

#include "wr/config.hpp"

namespace wr {

// Element of the perfection of F_q((pi)) truncated to the config window:
// a finite sum  sum_e c_e * pi^e  with c_e in F_q and e rational with
// denominator dividing p^root_cap, plus an optional error term O(pi^err).
//
// Invariants after construction: no zero coefficients, every stored
// exponent is < err and lies in [win_lo, win_hi].  Terms pushed above
// win_hi are dropped and recorded in err; terms below win_lo are an error
// (they would dominate every norm, so silent truncation is never sound).
//
// Error propagation: err(x+y) = min(err_x, err_y);
// err(x*y) = min(err_x + v(y), err_y + v(x));  pth_power multiplies err
// by p and pth_root divides it by p.
class PerfLaurent {
 public:
  PerfLaurent() = default;  // invalid until assigned; cfg() == nullptr
  PerfLaurent(ConfigPtr cfg, std::map<Rat, FqElem> terms, Val err);

  static PerfLaurent zero(ConfigPtr cfg);
  static PerfLaurent one(ConfigPtr cfg);
  static PerfLaurent from_fq(ConfigPtr cfg, const FqElem& c);
  // c * pi^e
  static PerfLaurent monomial(ConfigPtr cfg, const Rat& e, const FqElem& c);
  static PerfLaurent pi(ConfigPtr cfg);

  const ConfigPtr& cfg() const { return cfg_; }
  const std::map<Rat, FqElem>& terms() const { return terms_; }
  const Val& err() const { return err_; }

  // pi-adic valuation: least exponent, or err when no term is stored
  // (so the valuation of an inexact zero is its error exponent)
  Val v_pi() const;
  // coefficient of pi^e (zero if absent)
  FqElem coeff(const Rat& e) const;
  FqElem leading_coeff() const;  // domain_error when no terms

  bool is_zero() const { return terms_.empty(); }  // zero within precision
  bool is_exact() const { return err_.is_inf(); }

  PerfLaurent operator+(const PerfLaurent& o) const;
  PerfLaurent operator-(const PerfLaurent& o) const;
  PerfLaurent operator-() const;
  PerfLaurent operator*(const PerfLaurent& o) const;
  // structural equality: identical terms and identical error
  bool operator==(const PerfLaurent& o) const;
  bool operator!=(const PerfLaurent& o) const { return !(*this == o); }
  // x and y carry the same value within the coarser of the two errors
  bool agrees(const PerfLaurent& o) const;

  PerfLaurent pth_power() const;
  // domain_error if some exponent denominator would exceed the root cap
  PerfLaurent pth_root() const;
  PerfLaurent pow_int(long e) const;  // e >= 0

  // copy with err := min(err, e)
  PerfLaurent with_error(const Rat& e) const;
  // exact split at the exponent threshold: first has the terms with e < t
  // (error-free), second the terms with e >= t together with this->err()
  std::pair<PerfLaurent, PerfLaurent> split_at(const Rat& t) const;

  // multiplicative inverse of a unit (nonzero leading term), computed by a
  // geometric series until the error or the window stops it; optional prec
  // caps the error exponent of the result.  domain_error on zero.
  PerfLaurent inverse(std::optional<Rat> prec = std::nullopt) const;

  // canonical text form, e.g. "(1)*pi^(-1/2) + (0,1)*pi^(2) + O(pi^(7/2))"
  std::string str() const;

 private:
  void check(const PerfLaurent& o) const;
  void normalize();

  ConfigPtr cfg_;
  std::map<Rat, FqElem> terms_;
  Val err_ = Val::infinity();
};

}  // namespace wr
