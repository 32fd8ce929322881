#include "wr/fq.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>

#include "wr/rational.hpp"

namespace wr {

namespace {

// dense F_p[y] helpers; vectors are coefficient lists, ascending, possibly
// with trailing zeros
long norm_mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

void trim(std::vector<long>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = norm_mod(a, p);
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw domain_error("inverse of zero residue");
  return norm_mod(t, p);
}

std::vector<long> pmul(const std::vector<long>& a, const std::vector<long>& b,
                       long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = norm_mod(r[i + j] + a[i] * b[j], p);
  }
  trim(r);
  return r;
}

// remainder of a modulo monic-after-scaling b
std::vector<long> pmod(std::vector<long> a, const std::vector<long>& b,
                       long p) {
  trim(a);
  std::vector<long> bb = b;
  trim(bb);
  if (bb.empty()) throw domain_error("poly mod by zero");
  long lead_inv = inv_mod(bb.back(), p);
  while (a.size() >= bb.size()) {
    long c = norm_mod(a.back() * lead_inv, p);
    size_t off = a.size() - bb.size();
    if (c != 0)
      for (size_t i = 0; i < bb.size(); ++i)
        a[off + i] = norm_mod(a[off + i] - c * bb[i], p);
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

std::vector<long> pgcd(std::vector<long> a, std::vector<long> b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<long> pderiv(const std::vector<long>& f, long p) {
  std::vector<long> r;
  for (size_t i = 1; i < f.size(); ++i)
    r.push_back(norm_mod(f[i] * (long)(i % (unsigned long)p), p));
  trim(r);
  return r;
}

// distinct-irreducible-factor count of squarefree f via the Frobenius map
// rank (Berlekamp); f monic of degree D >= 1
bool is_irreducible(const std::vector<long>& f, long p) {
  size_t D = f.size() - 1;
  if (D == 1) return true;
  if (f[0] == 0) return false;  // divisible by y
  auto df = pderiv(f, p);
  auto g = pgcd(f, df, p);
  if (g.size() != 1) return false;  // not squarefree (or deriv zero)
  // columns of Q: y^(i*p) mod f
  std::vector<std::vector<long>> Q(D, std::vector<long>(D, 0));
  std::vector<long> ypow{1};  // y^(0*p)
  std::vector<long> yp(p + 1, 0);
  yp[p] = 1;
  auto ypm = pmod(yp, f, p);
  for (size_t i = 0; i < D; ++i) {
    for (size_t j = 0; j < ypow.size(); ++j) Q[j][i] = ypow[j];
    if (i + 1 < D) ypow = pmod(pmul(ypow, ypm, p), f, p);
  }
  // rank of Q - I; factor count = D - rank, irreducible iff count == 1
  for (size_t i = 0; i < D; ++i) Q[i][i] = norm_mod(Q[i][i] - 1, p);
  size_t rank = 0;
  for (size_t col = 0; col < D && rank < D; ++col) {
    size_t piv = rank;
    while (piv < D && Q[piv][col] == 0) ++piv;
    if (piv == D) continue;
    std::swap(Q[piv], Q[rank]);
    long inv = inv_mod(Q[rank][col], p);
    for (size_t j = col; j < D; ++j) Q[rank][j] = norm_mod(Q[rank][j] * inv, p);
    for (size_t i = 0; i < D; ++i) {
      if (i == rank || Q[i][col] == 0) continue;
      long c = Q[i][col];
      for (size_t j = col; j < D; ++j)
        Q[i][j] = norm_mod(Q[i][j] - c * Q[rank][j], p);
    }
    ++rank;
    if (D - rank > 1 && col + 1 == D) break;
  }
  return D - rank == 1;
}

std::mutex irr_mtx;
std::map<std::pair<long, long>, std::vector<long>> irr_cache;

}  // namespace

std::vector<long> find_irreducible(long p, long D) {
  if (D < 1) throw domain_error("find_irreducible: degree must be >= 1");
  {
    std::lock_guard<std::mutex> lk(irr_mtx);
    auto it = irr_cache.find({p, D});
    if (it != irr_cache.end()) return it->second;
  }
  std::vector<long> f(D + 1, 0);
  f[D] = 1;
  // enumerate tails by base-p index; index 0 has c0 = 0, skip it
  for (unsigned long idx = 1;; ++idx) {
    unsigned long k = idx;
    for (long i = 0; i < D; ++i) {
      f[i] = (long)(k % (unsigned long)p);
      k /= (unsigned long)p;
    }
    if (k != 0) throw precision_error("find_irreducible: search exhausted");
    if (f[0] == 0) continue;
    if (is_irreducible(f, p)) {
      std::lock_guard<std::mutex> lk(irr_mtx);
      irr_cache[{p, D}] = f;
      return f;
    }
  }
}

FqCtx::FqCtx(long p, std::vector<long> g) : p_(p), g_(std::move(g)) {
  if (p < 2) throw domain_error("FqCtx: p must be a prime >= 2");
  for (long i = 2; i * i <= p; ++i)
    if (p % i == 0) throw domain_error("FqCtx: p must be prime");
  trim(g_);
  if (g_.size() < 2) throw domain_error("FqCtx: modulus must have degree >= 1");
  d_ = (long)g_.size() - 1;
  for (auto& c : g_) c = norm_mod(c, p_);
  if (g_.back() != 1) throw domain_error("FqCtx: modulus must be monic");
  if (d_ > 1 && !is_irreducible(g_, p_))
    throw domain_error("FqCtx: modulus is reducible");
}

unsigned long FqCtx::q_ulong() const {
  unsigned long q = 1;
  for (long i = 0; i < d_; ++i) {
    if (q > (unsigned long)1 << 56) throw precision_error("q too large");
    q *= (unsigned long)p_;
  }
  return q;
}

std::vector<long> FqCtx::default_modulus(long p, long d) {
  if (d == 1) return {0, 1};  // y
  if (p == 2 && d == 2) return {1, 1, 1};
  if (p == 3 && d == 2) return {1, 0, 1};
  if (p == 2 && d == 3) return {1, 1, 0, 1};
  if (p == 5 && d == 2) return {2, 0, 1};
  return find_irreducible(p, d);
}

std::shared_ptr<const FqCtx> FqCtx::make(long p, long d) {
  return std::make_shared<const FqCtx>(p, default_modulus(p, d));
}

std::shared_ptr<const FqCtx> FqCtx::make(long p, std::vector<long> g) {
  return std::make_shared<const FqCtx>(p, std::move(g));
}

FqElem::FqElem(std::shared_ptr<const FqCtx> ctx, std::vector<long> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  if (!ctx_) throw domain_error("FqElem: null context");
  long p = ctx_->p();
  if ((long)c_.size() > ctx_->d()) {
    for (auto& x : c_) x = norm_mod(x, p);
    c_ = pmod(c_, ctx_->modulus(), p);
  }
  c_.resize(ctx_->d(), 0);
  for (auto& x : c_) x = norm_mod(x, p);
}

FqElem FqElem::zero(std::shared_ptr<const FqCtx> ctx) {
  return FqElem(std::move(ctx), {});
}

FqElem FqElem::one(std::shared_ptr<const FqCtx> ctx) {
  return FqElem(std::move(ctx), {1});
}

FqElem FqElem::from_int(std::shared_ptr<const FqCtx> ctx, long a) {
  return FqElem(std::move(ctx), {a});
}

FqElem FqElem::gen(std::shared_ptr<const FqCtx> ctx) {
  if (ctx->d() < 2) throw domain_error("gen: prime field has no y");
  return FqElem(std::move(ctx), {0, 1});
}

FqElem FqElem::from_index(std::shared_ptr<const FqCtx> ctx, unsigned long i) {
  std::vector<long> c(ctx->d(), 0);
  for (long k = 0; k < ctx->d(); ++k) {
    c[k] = (long)(i % (unsigned long)ctx->p());
    i /= (unsigned long)ctx->p();
  }
  if (i != 0) throw domain_error("from_index: index out of range");
  return FqElem(std::move(ctx), std::move(c));
}

unsigned long FqElem::index() const {
  unsigned long i = 0;
  for (size_t k = c_.size(); k-- > 0;)
    i = i * (unsigned long)ctx_->p() + (unsigned long)c_[k];
  return i;
}

bool FqElem::is_zero() const {
  for (long x : c_)
    if (x != 0) return false;
  return true;
}

bool FqElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void FqElem::check(const FqElem& o) const {
  if (!ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_))
    throw domain_error("FqElem: incompatible field contexts");
}

FqElem FqElem::operator+(const FqElem& o) const {
  check(o);
  std::vector<long> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    r[i] = norm_mod(c_[i] + o.c_[i], ctx_->p());
  return FqElem(ctx_, std::move(r));
}

FqElem FqElem::operator-(const FqElem& o) const {
  check(o);
  std::vector<long> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    r[i] = norm_mod(c_[i] - o.c_[i], ctx_->p());
  return FqElem(ctx_, std::move(r));
}

FqElem FqElem::operator-() const {
  std::vector<long> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = norm_mod(-c_[i], ctx_->p());
  return FqElem(ctx_, std::move(r));
}

FqElem FqElem::operator*(const FqElem& o) const {
  check(o);
  auto prod = pmul(c_, o.c_, ctx_->p());
  return FqElem(ctx_, pmod(prod, ctx_->modulus(), ctx_->p()));
}

bool FqElem::operator==(const FqElem& o) const {
  check(o);
  return c_ == o.c_;
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw domain_error("FqElem: inverse of zero");
  // extended Euclid in F_p[y] against the modulus
  long p = ctx_->p();
  std::vector<long> r0 = ctx_->modulus(), r1 = c_, s0 = {}, s1 = {1};
  trim(r1);
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    std::vector<long> q;
    {
      std::vector<long> a = r0;
      long li = inv_mod(r1.back(), p);
      q.assign(a.size() >= r1.size() ? a.size() - r1.size() + 1 : 0, 0);
      while (a.size() >= r1.size() && !a.empty()) {
        long cq = norm_mod(a.back() * li, p);
        size_t off = a.size() - r1.size();
        q[off] = cq;
        if (cq != 0)
          for (size_t i = 0; i < r1.size(); ++i)
            a[off + i] = norm_mod(a[off + i] - cq * r1[i], p);
        a.pop_back();
        trim(a);
      }
      r0.swap(r1);
      r1 = std::move(a);
    }
    // s2 = s0 - q*s1
    auto qs1 = pmul(q, s1, p);
    std::vector<long> s2(std::max(s0.size(), qs1.size()), 0);
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < qs1.size(); ++i)
      s2[i] = norm_mod(s2[i] - qs1[i], p);
    trim(s2);
    s0.swap(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd, a nonzero constant since the modulus is irreducible
  if (r0.size() != 1) throw domain_error("FqElem: gcd not constant");
  long scale = inv_mod(r0[0], p);
  for (auto& x : s0) x = norm_mod(x * scale, p);
  return FqElem(ctx_, std::move(s0));
}

FqElem FqElem::pow(unsigned long e) const {
  FqElem acc = one(ctx_), sq = *this;
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    e >>= 1;
    if (e) sq = sq * sq;
  }
  return acc;
}

FqElem FqElem::pth_power() const { return pow((unsigned long)ctx_->p()); }

FqElem FqElem::pth_root() const {
  // x -> x^(p^(d-1)) inverts Frobenius on F_{p^d}
  FqElem r = *this;
  for (long i = 0; i + 1 < ctx_->d(); ++i) r = r.pth_power();
  return r;
}

std::string FqElem::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

namespace {

// x^e in F via square-and-multiply with an mpz exponent
FqElem pow_mpz(const FqElem& x, Int e) {
  FqElem acc = FqElem::one(x.ctx()), sq = x;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = acc * sq;
    e >>= 1;
    if (e > 0) sq = sq * sq;
  }
  return acc;
}

// square root in F_{p^D}, p odd, via Tonelli-Shanks; domain_error if x is
// a nonresidue
FqElem fq_sqrt(const FqElem& x) {
  auto ctx = x.ctx();
  if (x.is_zero()) return x;
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), (unsigned long)ctx->p(),
                (unsigned long)ctx->d());
  Int qm1 = q - 1;
  if (pow_mpz(x, qm1 / 2) != FqElem::one(ctx))
    throw domain_error("fq_sqrt: nonresidue");
  // q - 1 = 2^s * t
  Int t = qm1;
  unsigned long s = 0;
  while (mpz_even_p(t.get_mpz_t())) {
    t >>= 1;
    ++s;
  }
  // deterministic nonresidue sweep
  FqElem z = FqElem::zero(ctx);
  for (unsigned long idx = 1;; ++idx) {
    z = FqElem::from_index(ctx, idx);
    if (z.is_zero()) continue;
    if (pow_mpz(z, qm1 / 2) != FqElem::one(ctx)) break;
    if (idx > 10000) throw precision_error("fq_sqrt: no nonresidue found");
  }
  FqElem c = pow_mpz(z, t);
  FqElem r = pow_mpz(x, (t + 1) / 2);
  FqElem u = pow_mpz(x, t);
  unsigned long m = s;
  while (!u.is_one()) {
    unsigned long i = 0;
    FqElem v = u;
    while (!v.is_one()) {
      v = v * v;
      ++i;
      if (i == m) throw domain_error("fq_sqrt: not a square");
    }
    FqElem b = c;
    for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b;
    r = r * b;
    c = b * b;
    u = u * c;
    m = i;
  }
  return r;
}

// solve u^2 + u = a over F_{2^D} (F_2-linear); domain_error if no solution
FqElem as_solve_f2(const FqElem& a) {
  auto ctx = a.ctx();
  long D = ctx->d();
  // matrix of u -> u^2 + u in the power basis
  std::vector<std::vector<long>> M(D, std::vector<long>(D + 1, 0));
  for (long j = 0; j < D; ++j) {
    std::vector<long> e(j + 1, 0);
    e[j] = 1;
    FqElem b(ctx, e);
    FqElem im = b * b + b;
    for (long i = 0; i < D; ++i) M[i][j] = im.coeffs()[i];
  }
  for (long i = 0; i < D; ++i) M[i][D] = a.coeffs()[i];
  // Gaussian elimination over F_2
  long rank = 0;
  std::vector<long> pivot_col(D, -1);
  for (long col = 0; col < D && rank < D; ++col) {
    long piv = rank;
    while (piv < D && M[piv][col] == 0) ++piv;
    if (piv == D) continue;
    std::swap(M[piv], M[rank]);
    for (long i = 0; i < D; ++i) {
      if (i != rank && M[i][col] != 0)
        for (long j = col; j <= D; ++j) M[i][j] ^= M[rank][j];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (long i = rank; i < D; ++i)
    if (M[i][D] != 0) throw domain_error("as_solve_f2: no solution");
  std::vector<long> u(D, 0);
  for (long i = 0; i < rank; ++i) u[pivot_col[i]] = M[i][D];
  return FqElem(ctx, std::move(u));
}

}  // namespace

FqEmbed::FqEmbed(std::shared_ptr<const FqCtx> src,
                 std::shared_ptr<const FqCtx> dst)
    : src_(std::move(src)), dst_(std::move(dst)), root_(FqElem::zero(dst_)) {
  if (src_->p() != dst_->p())
    throw domain_error("FqEmbed: different characteristics");
  if (dst_->d() % src_->d() != 0)
    throw domain_error("FqEmbed: target degree not a multiple");
  long d = src_->d(), p = src_->p();
  if (d == 1) {
    root_ = FqElem::zero(dst_);  // unused
    return;
  }
  if (d != 2)
    throw domain_error("FqEmbed: only source degrees 1 and 2 supported");
  const auto& g = src_->modulus();  // y^2 + b y + c
  long b = g[1], c0 = g[0];
  if (p == 2) {
    // irreducible quadratics over F_2 have b = c = 1: root solves u^2+u=1
    root_ = as_solve_f2(FqElem::one(dst_));
  } else {
    // y = (-b + sqrt(b^2 - 4c)) / 2
    long disc = norm_mod(b * b - 4 * c0, p);
    FqElem s = fq_sqrt(FqElem::from_int(dst_, disc));
    long half = inv_mod(2, p);
    root_ = (FqElem::from_int(dst_, -b) + s) * FqElem::from_int(dst_, half);
  }
  // sanity: g(root) == 0
  FqElem v = root_ * root_ + FqElem::from_int(dst_, b) * root_ +
             FqElem::from_int(dst_, c0);
  if (!v.is_zero()) throw domain_error("FqEmbed: root verification failed");
}

FqElem FqEmbed::map(const FqElem& x) const {
  if (!x.ctx()->same(*src_)) throw domain_error("FqEmbed: wrong source field");
  FqElem acc = FqElem::zero(dst_);
  for (size_t i = x.coeffs().size(); i-- > 0;)
    acc = acc * root_ + FqElem::from_int(dst_, x.coeffs()[i]);
  return acc;
}

}  // namespace wr
