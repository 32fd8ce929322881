#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "wr/config.hpp"
#include "wr/perflaurent.hpp"

namespace wr {

// Torsion-free lifts of the coefficient rings, used for exact ghost-side
// Witt arithmetic.  F_q = F_p[y]/(g) lifts to Z[y]/(g~) where g~ is g read
// with integer digits; the perfected Laurent ring lifts termwise to Laurent
// series in pi^(1/p^M) with Z[y]/(g~) coefficients.  Both are torsion-free,
// so division by p^n is exact whenever it is possible at all, and reduction
// of digits mod p is a ring homomorphism back to the coefficient ring.

struct ZqCtx {
  long p, d;
  std::vector<Int> g;  // monic, length d+1
  static std::shared_ptr<const ZqCtx> from(const FqCtx& f);
  bool same(const ZqCtx& o) const { return p == o.p && g == o.g; }
};
using ZqCtxPtr = std::shared_ptr<const ZqCtx>;

// element of Z[y]/(g~): digit vector of length d with unbounded integers
class ZqEl {
 public:
  ZqEl() = default;
  ZqEl(ZqCtxPtr ctx, std::vector<Int> c);

  static ZqEl zero(ZqCtxPtr ctx);
  static ZqEl lift_of(const FqElem& x, const ZqCtxPtr& ctx);
  FqElem reduce(const std::shared_ptr<const FqCtx>& fq) const;

  const ZqCtxPtr& ctx() const { return ctx_; }
  const std::vector<Int>& digits() const { return c_; }
  bool is_zero() const;

  ZqEl operator+(const ZqEl& o) const;
  ZqEl operator-(const ZqEl& o) const;
  ZqEl operator-() const;
  ZqEl operator*(const ZqEl& o) const;
  bool operator==(const ZqEl& o) const { return c_ == o.c_; }

  ZqEl pow_ul(unsigned long e) const;
  ZqEl mul_p_pow(long k) const;  // times p^k, k >= 0
  // exact division by p^k; nullopt when some digit is not divisible
  std::optional<ZqEl> div_p_pow(long k) const;

 private:
  ZqCtxPtr ctx_;
  std::vector<Int> c_;
};

// element of the termwise lift of PerfLaurent: finite sum of pi^e with
// ZqEl coefficients, exact (no window, no error term)
class LiftSeries {
 public:
  LiftSeries() = default;
  explicit LiftSeries(ZqCtxPtr ctx) : ctx_(std::move(ctx)) {}
  LiftSeries(ZqCtxPtr ctx, std::map<Rat, ZqEl> t);

  static LiftSeries lift_of(const PerfLaurent& x, const ZqCtxPtr& ctx);
  // reduction mod p; window clipping of the target config applies and is
  // recorded in the error term as usual
  PerfLaurent reduce(const ConfigPtr& cfg) const;

  const ZqCtxPtr& ctx() const { return ctx_; }
  const std::map<Rat, ZqEl>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  LiftSeries operator+(const LiftSeries& o) const;
  LiftSeries operator-(const LiftSeries& o) const;
  LiftSeries operator-() const;
  LiftSeries operator*(const LiftSeries& o) const;

  LiftSeries pow_ul(unsigned long e) const;
  LiftSeries mul_p_pow(long k) const;
  std::optional<LiftSeries> div_p_pow(long k) const;

 private:
  void normalize();
  ZqCtxPtr ctx_;
  std::map<Rat, ZqEl> terms_;
};

}  // namespace wr
