#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "wr/error.hpp"

namespace wr {

using Int = mpz_class;
using Rat = mpq_class;  // always kept canonical by gmpxx

inline Rat make_rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// Valuation-like quantity: an exact rational or +infinity.  Used for
// pi-adic valuations, error bounds and log-scale Gauss valuations.
class Val {
 public:
  Val() : inf_(false), v_(0) {}
  explicit Val(const Rat& v) : inf_(false), v_(v) {}
  explicit Val(long v) : inf_(false), v_(v) {}
  static Val infinity() {
    Val x;
    x.inf_ = true;
    return x;
  }

  bool is_inf() const { return inf_; }
  const Rat& finite() const {
    if (inf_) throw domain_error("Val: +infinity where finite value required");
    return v_;
  }

  friend bool operator==(const Val& a, const Val& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Val& a, const Val& b) { return !(a == b); }
  friend bool operator<(const Val& a, const Val& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const Val& a, const Val& b) { return b < a; }
  friend bool operator<=(const Val& a, const Val& b) { return !(b < a); }
  friend bool operator>=(const Val& a, const Val& b) { return !(a < b); }

  // +infinity absorbs addition; (+inf) + (+inf) = +inf.
  friend Val operator+(const Val& a, const Val& b) {
    if (a.inf_ || b.inf_) return infinity();
    return Val(a.v_ + b.v_);
  }
  friend Val operator+(const Val& a, const Rat& b) { return a + Val(b); }
  friend Val operator*(const Rat& s, const Val& a) {
    if (a.inf_) return infinity();
    return Val(s * a.v_);
  }

  friend Val min(const Val& a, const Val& b) { return a < b ? a : b; }
  friend Val max(const Val& a, const Val& b) { return a < b ? b : a; }

  std::string str() const;

 private:
  bool inf_;
  Rat v_;
};

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);  // "a/b" or "a"

// Exact comparison of b1^e1 with b2^e2 for positive rational bases and
// rational exponents.  Returns -1, 0, +1.  Everything reduces to integer
// mpq powers after clearing exponent denominators; desk-scale exponents
// keep this cheap.
int cmp_pow(const Rat& b1, const Rat& e1, const Rat& b2, const Rat& e2);

// Convenience: compare p^x with q (p integer >= 2, q positive rational).
inline int cmp_p_pow(long p, const Rat& x, const Rat& q) {
  return cmp_pow(Rat(p), x, q, Rat(1));
}

Rat rat_pow_int(const Rat& b, long e);  // b^e, e any integer

}  // namespace wr
