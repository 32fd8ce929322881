#include "wr/lift.hpp"

namespace wr {

std::shared_ptr<const ZqCtx> ZqCtx::from(const FqCtx& f) {
  auto z = std::make_shared<ZqCtx>();
  z->p = f.p();
  z->d = f.d();
  z->g.assign(f.modulus().begin(), f.modulus().end());
  return z;
}

ZqEl::ZqEl(ZqCtxPtr ctx, std::vector<Int> c)
    : ctx_(std::move(ctx)), c_(std::move(c)) {
  if (!ctx_) throw domain_error("ZqEl: null context");
  if ((long)c_.size() > ctx_->d) {
    // reduce by the monic modulus over Z
    for (size_t i = c_.size(); i-- > (size_t)ctx_->d;) {
      Int top = c_[i];
      if (top == 0) continue;
      for (long j = 0; j <= ctx_->d; ++j)
        c_[i - ctx_->d + j] -= top * ctx_->g[j];
    }
    c_.resize(ctx_->d);
  }
  c_.resize(ctx_->d, Int(0));
}

ZqEl ZqEl::zero(ZqCtxPtr ctx) { return ZqEl(std::move(ctx), {}); }

ZqEl ZqEl::lift_of(const FqElem& x, const ZqCtxPtr& ctx) {
  std::vector<Int> c(x.coeffs().begin(), x.coeffs().end());
  return ZqEl(ctx, std::move(c));
}

FqElem ZqEl::reduce(const std::shared_ptr<const FqCtx>& fq) const {
  std::vector<long> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    Int r = c_[i] % ctx_->p;
    if (r < 0) r += ctx_->p;
    c[i] = r.get_si();
  }
  return FqElem(fq, std::move(c));
}

bool ZqEl::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

ZqEl ZqEl::operator+(const ZqEl& o) const {
  std::vector<Int> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return ZqEl(ctx_, std::move(c));
}

ZqEl ZqEl::operator-(const ZqEl& o) const {
  std::vector<Int> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return ZqEl(ctx_, std::move(c));
}

ZqEl ZqEl::operator-() const {
  std::vector<Int> c(c_);
  for (auto& x : c) x = -x;
  return ZqEl(ctx_, std::move(c));
}

ZqEl ZqEl::operator*(const ZqEl& o) const {
  if (c_.empty() || o.c_.empty()) return zero(ctx_);
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return ZqEl(ctx_, std::move(r));
}

ZqEl ZqEl::pow_ul(unsigned long e) const {
  ZqEl acc(ctx_, {Int(1)});
  ZqEl sq = *this;
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    e >>= 1;
    if (e) sq = sq * sq;
  }
  return acc;
}

ZqEl ZqEl::mul_p_pow(long k) const {
  Int f;
  mpz_ui_pow_ui(f.get_mpz_t(), (unsigned long)ctx_->p, (unsigned long)k);
  std::vector<Int> c(c_);
  for (auto& x : c) x *= f;
  return ZqEl(ctx_, std::move(c));
}

std::optional<ZqEl> ZqEl::div_p_pow(long k) const {
  Int f;
  mpz_ui_pow_ui(f.get_mpz_t(), (unsigned long)ctx_->p, (unsigned long)k);
  std::vector<Int> c(c_);
  for (auto& x : c) {
    if (!mpz_divisible_p(x.get_mpz_t(), f.get_mpz_t())) return std::nullopt;
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), f.get_mpz_t());
  }
  return ZqEl(ctx_, std::move(c));
}

LiftSeries::LiftSeries(ZqCtxPtr ctx, std::map<Rat, ZqEl> t)
    : ctx_(std::move(ctx)), terms_(std::move(t)) {
  if (!ctx_) throw domain_error("LiftSeries: null context");
  normalize();
}

void LiftSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

LiftSeries LiftSeries::lift_of(const PerfLaurent& x, const ZqCtxPtr& ctx) {
  std::map<Rat, ZqEl> t;
  for (const auto& [e, c] : x.terms()) t.emplace(e, ZqEl::lift_of(c, ctx));
  return LiftSeries(ctx, std::move(t));
}

PerfLaurent LiftSeries::reduce(const ConfigPtr& cfg) const {
  std::map<Rat, FqElem> t;
  for (const auto& [e, c] : terms_) {
    FqElem r = c.reduce(cfg->fq());
    if (!r.is_zero()) t.emplace(e, r);
  }
  return PerfLaurent(cfg, std::move(t), Val::infinity());
}

LiftSeries LiftSeries::operator+(const LiftSeries& o) const {
  std::map<Rat, ZqEl> t = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto it = t.find(e);
    if (it == t.end())
      t.emplace(e, c);
    else
      it->second = it->second + c;
  }
  return LiftSeries(ctx_, std::move(t));
}

LiftSeries LiftSeries::operator-() const {
  std::map<Rat, ZqEl> t = terms_;
  for (auto& [e, c] : t) c = -c;
  return LiftSeries(ctx_, std::move(t));
}

LiftSeries LiftSeries::operator-(const LiftSeries& o) const {
  return *this + (-o);
}

LiftSeries LiftSeries::operator*(const LiftSeries& o) const {
  std::map<Rat, ZqEl> t;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Rat e = e1 + e2;
      ZqEl prod = c1 * c2;
      auto it = t.find(e);
      if (it == t.end())
        t.emplace(std::move(e), std::move(prod));
      else
        it->second = it->second + prod;
    }
  return LiftSeries(ctx_, std::move(t));
}

LiftSeries LiftSeries::pow_ul(unsigned long e) const {
  LiftSeries acc(ctx_, {{Rat(0), ZqEl(ctx_, {Int(1)})}});
  LiftSeries sq = *this;
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    e >>= 1;
    if (e) sq = sq * sq;
  }
  return acc;
}

LiftSeries LiftSeries::mul_p_pow(long k) const {
  std::map<Rat, ZqEl> t = terms_;
  for (auto& [e, c] : t) c = c.mul_p_pow(k);
  return LiftSeries(ctx_, std::move(t));
}

std::optional<LiftSeries> LiftSeries::div_p_pow(long k) const {
  std::map<Rat, ZqEl> t = terms_;
  for (auto& [e, c] : t) {
    auto q = c.div_p_pow(k);
    if (!q) return std::nullopt;
    c = *q;
  }
  return LiftSeries(ctx_, std::move(t));
}

}  // namespace wr
