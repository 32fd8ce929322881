#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wr/error.hpp"

namespace wr {

// F_q = F_p[y]/(g), q = p^d, g monic irreducible of degree d with digits in
// [0,p).  The context is shared by every element created from it; two
// contexts are compatible iff p and g agree.
class FqCtx {
 public:
  FqCtx(long p, std::vector<long> g_digits);  // g ascending, g[d] == 1

  long p() const { return p_; }
  long d() const { return d_; }
  const std::vector<long>& modulus() const { return g_; }
  // q = p^d as unsigned long; throws precision_error if it does not fit.
  unsigned long q_ulong() const;

  bool same(const FqCtx& o) const { return p_ == o.p_ && g_ == o.g_; }

  // Built-in modulus for (p,d): d=1 -> y; (2,2) -> y^2+y+1; (3,2) -> y^2+1;
  // (2,3) -> y^3+y+1; (5,2) -> y^2+2.  Anything else must be user-supplied.
  static std::vector<long> default_modulus(long p, long d);
  static std::shared_ptr<const FqCtx> make(long p, long d);
  static std::shared_ptr<const FqCtx> make(long p, std::vector<long> g);

 private:
  long p_, d_;
  std::vector<long> g_;  // length d+1, monic
};

class FqElem {
 public:
  FqElem() = default;  // invalid until assigned; ctx() == nullptr
  FqElem(std::shared_ptr<const FqCtx> ctx, std::vector<long> coeffs);

  static FqElem zero(std::shared_ptr<const FqCtx> ctx);
  static FqElem one(std::shared_ptr<const FqCtx> ctx);
  static FqElem from_int(std::shared_ptr<const FqCtx> ctx, long a);
  // y^k (k < d); the canonical generator image is gen(ctx) = y for d > 1.
  static FqElem gen(std::shared_ptr<const FqCtx> ctx);
  // element with index i in [0, q): base-p digits of i are the coefficients
  static FqElem from_index(std::shared_ptr<const FqCtx> ctx, unsigned long i);
  unsigned long index() const;

  const std::shared_ptr<const FqCtx>& ctx() const { return ctx_; }
  const std::vector<long>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }

  FqElem inverse() const;          // domain_error on zero
  FqElem pth_power() const;        // x -> x^p
  FqElem pth_root() const;         // inverse of pth_power (= x^(p^(d-1)))
  FqElem pow(unsigned long e) const;

  std::string str() const;  // digits ascending: "(a0,a1,...)"

 private:
  void check(const FqElem& o) const;
  std::shared_ptr<const FqCtx> ctx_;
  std::vector<long> c_;  // length d, digits in [0,p)
};

// Embedding F_{p^d} -> F_{p^D} determined by a chosen root of the source
// modulus in the target field.  Supported for d = 1 and d = 2 (which covers
// every base field the artifact constructs); other degrees raise
// domain_error.  The root choice is deterministic for reproducibility.
class FqEmbed {
 public:
  FqEmbed(std::shared_ptr<const FqCtx> src, std::shared_ptr<const FqCtx> dst);
  const std::shared_ptr<const FqCtx>& src() const { return src_; }
  const std::shared_ptr<const FqCtx>& dst() const { return dst_; }
  FqElem map(const FqElem& x) const;

 private:
  std::shared_ptr<const FqCtx> src_, dst_;
  FqElem root_;  // image of y under the embedding
};

// Deterministic irreducible modulus of degree D over F_p, found by
// sieving candidates in index order and testing irreducibility.
std::vector<long> find_irreducible(long p, long D);

}  // namespace wr
