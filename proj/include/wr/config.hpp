#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wr/fq.hpp"
#include "wr/rational.hpp"

namespace wr {

// Shared arithmetic parameters: the coefficient field F_q = F_p[y]/(g), the
// Witt truncation length N, the root cap M_max (perfected exponents have
// denominator dividing p^M_max), the norm normalization constant c (the
// Gauss weight of pi), and the exponent window [win_lo, win_hi] that bounds
// which powers of pi a series may carry.  Two configs are compatible iff
// all of these agree; elements from incompatible configs never mix.
class NormConfig {
 public:
  struct Params {
    long p = 2;
    std::vector<long> q_modulus;  // empty -> y (prime coefficient field)
    long witt_len = 3;            // N >= 1
    long root_cap = 8;            // M_max >= 0
    Rat c = 0;                    // 0 -> default p/(p-1)
    Rat win_lo = -128;
    Rat win_hi = 128;
    unsigned long seed = 12345;
  };

  explicit NormConfig(Params ps);

  static std::shared_ptr<const NormConfig> make(Params ps) {
    return std::make_shared<const NormConfig>(std::move(ps));
  }
  static std::shared_ptr<const NormConfig> make_default(long p) {
    Params ps;
    ps.p = p;
    return make(std::move(ps));
  }

  long p() const { return p_; }
  long d() const { return fq_->d(); }
  const std::shared_ptr<const FqCtx>& fq() const { return fq_; }
  long witt_len() const { return witt_len_; }
  long root_cap() const { return root_cap_; }
  const Rat& c() const { return c_; }
  const Rat& win_lo() const { return win_lo_; }
  const Rat& win_hi() const { return win_hi_; }
  unsigned long seed() const { return seed_; }

  bool same(const NormConfig& o) const {
    return p_ == o.p_ && fq_->same(*o.fq_) && witt_len_ == o.witt_len_ &&
           root_cap_ == o.root_cap_ && c_ == o.c_ && win_lo_ == o.win_lo_ &&
           win_hi_ == o.win_hi_;
  }

  // multi-line "key: value" listing of every field, used by the CLI echo
  std::string describe() const;

 private:
  long p_;
  std::shared_ptr<const FqCtx> fq_;
  long witt_len_, root_cap_;
  Rat c_, win_lo_, win_hi_;
  unsigned long seed_;
};

using ConfigPtr = std::shared_ptr<const NormConfig>;

}  // namespace wr
