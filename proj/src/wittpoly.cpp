#include "wr/wittpoly.hpp"

#include <mutex>
#include <stdexcept>

namespace wr {

namespace {

// sparse integer polynomial used only during table generation
struct ZP {
  long nvars = 0;
  std::map<WpMono, Int> t;

  static ZP zero(long nv) { return ZP{nv, {}}; }
  static ZP variable(long nv, long idx, unsigned short e) {
    WpMono m((size_t)nv, 0);
    m[(size_t)idx] = e;
    return ZP{nv, {{m, Int(1)}}};
  }

  ZP operator+(const ZP& o) const {
    ZP r = *this;
    for (const auto& [m, c] : o.t) {
      auto it = r.t.find(m);
      if (it == r.t.end())
        r.t.emplace(m, c);
      else {
        it->second += c;
        if (it->second == 0) r.t.erase(it);
      }
    }
    return r;
  }
  ZP operator-() const {
    ZP r = *this;
    for (auto& [m, c] : r.t) c = -c;
    return r;
  }
  ZP operator-(const ZP& o) const { return *this + (-o); }
  ZP operator*(const ZP& o) const {
    ZP r = zero(nvars);
    for (const auto& [m1, c1] : t)
      for (const auto& [m2, c2] : o.t) {
        WpMono m = m1;
        for (size_t k = 0; k < m.size(); ++k) {
          unsigned long e = (unsigned long)m[k] + m2[k];
          if (e > 60000) throw precision_error("witt table: exponent blowup");
          m[k] = (unsigned short)e;
        }
        Int prod = c1 * c2;
        auto it = r.t.find(m);
        if (it == r.t.end())
          r.t.emplace(std::move(m), std::move(prod));
        else {
          it->second += prod;
          if (it->second == 0) r.t.erase(it);
        }
      }
    return r;
  }
  ZP scal_p_pow(long p, long k) const {
    Int f;
    mpz_ui_pow_ui(f.get_mpz_t(), (unsigned long)p, (unsigned long)k);
    ZP r = *this;
    for (auto& [m, c] : r.t) c *= f;
    return r;
  }
  ZP pow_ul(unsigned long e) const {
    if (e == 0) {
      ZP r = zero(nvars);
      r.t.emplace(WpMono((size_t)nvars, 0), Int(1));
      return r;
    }
    ZP acc = *this, sq = *this;
    --e;
    while (e > 0) {
      if (e & 1) acc = acc * sq;
      e >>= 1;
      if (e) sq = sq * sq;
    }
    return acc;
  }
  // exact division by p^k; false if any coefficient resists
  bool div_p_pow(long p, long k) {
    Int f;
    mpz_ui_pow_ui(f.get_mpz_t(), (unsigned long)p, (unsigned long)k);
    for (auto& [m, c] : t) {
      if (!mpz_divisible_p(c.get_mpz_t(), f.get_mpz_t())) return false;
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), f.get_mpz_t());
    }
    return true;
  }
};

long table_cap(long p) {
  switch (p) {
    case 2:
      return 6;
    case 3:
      return 4;
    case 5:
      return 4;
    default:
      return 3;
  }
}

// joint isobaric weight of a monomial: sum over i of (a_i + b_i) p^i; for
// products, the x- and y-weights separately
void check_isobaric(const ZP& f, long p, long n, long N, bool product) {
  Int target;
  mpz_ui_pow_ui(target.get_mpz_t(), (unsigned long)p, (unsigned long)n);
  for (const auto& [m, c] : f.t) {
    Int wx = 0, wy = 0, ppow = 1;
    for (long i = 0; i < N; ++i) {
      wx += ppow * m[(size_t)i];
      wy += ppow * m[(size_t)(N + i)];
      ppow *= p;
    }
    bool ok = product ? (wx == target && wy == target)
                      : (wx + wy == target);
    if (!ok)
      throw std::logic_error("witt table: isobaric grading violated");
  }
}

WpPoly reduce_mod_p(const ZP& f, long p) {
  WpPoly r;
  r.nvars = f.nvars;
  for (const auto& [m, c] : f.t) {
    long cm = (long)mpz_fdiv_ui(c.get_mpz_t(), (unsigned long)p);
    if (cm != 0) r.t.emplace(m, cm);
  }
  return r;
}

std::vector<WpPoly> generate(long p, long N, bool product) {
  long nv = 2 * N;
  std::vector<ZP> B;
  std::vector<WpPoly> out;
  for (long n = 0; n < N; ++n) {
    if (n > 0)
      for (auto& b : B) b = b.pow_ul((unsigned long)p);
    unsigned long pn = 1;
    for (long k = 0; k < n; ++k) pn *= (unsigned long)p;
    // ghost components w_n(x), w_n(y): sum of p^i x_i^(p^(n-i))
    ZP gx = ZP::zero(nv), gy = ZP::zero(nv);
    unsigned long e = pn;
    for (long i = 0; i <= n; ++i) {
      gx = gx + ZP::variable(nv, i, (unsigned short)e).scal_p_pow(p, i);
      gy = gy + ZP::variable(nv, N + i, (unsigned short)e).scal_p_pow(p, i);
      e /= (unsigned long)p;
    }
    ZP target = product ? gx * gy : gx + gy;
    for (long i = 0; i < n; ++i)
      target = target - B[(size_t)i].scal_p_pow(p, i);
    if (!target.div_p_pow(p, n))
      throw std::logic_error("witt table: ghost division not exact");
    check_isobaric(target, p, n, N, product);
    out.push_back(reduce_mod_p(target, p));
    B.push_back(std::move(target));
  }
  return out;
}

std::mutex table_mtx;
std::map<std::pair<long, long>, std::shared_ptr<const WittPolyTable>>
    table_cache;

}  // namespace

std::map<std::pair<long, long>, long> WittPolyTable::single_sum(
    long n) const {
  std::map<std::pair<long, long>, long> r;
  for (const auto& [m, c] : sum_poly(n).t) {
    bool pure = true;
    for (long i = 1; i < N_ && pure; ++i)
      if (m[(size_t)i] || m[(size_t)(N_ + i)]) pure = false;
    if (pure) r[{(long)m[0], (long)m[(size_t)N_]}] = c;
  }
  return r;
}

bool WittPolyTable::single_sum_homogeneous(long n) const {
  Int target;
  mpz_ui_pow_ui(target.get_mpz_t(), (unsigned long)p_, (unsigned long)n);
  for (const auto& [ab, c] : single_sum(n))
    if (Int(ab.first) + Int(ab.second) != target) return false;
  return true;
}

bool WittPolyTable::isobaric_ok() const {
  for (long n = 0; n < N_; ++n) {
    Int target;
    mpz_ui_pow_ui(target.get_mpz_t(), (unsigned long)p_, (unsigned long)n);
    for (int which = 0; which < 2; ++which) {
      const WpPoly& f = which ? prod_poly(n) : sum_poly(n);
      for (const auto& [m, c] : f.t) {
        Int wx = 0, wy = 0, ppow = 1;
        for (long i = 0; i < N_; ++i) {
          wx += ppow * m[(size_t)i];
          wy += ppow * m[(size_t)(N_ + i)];
          ppow *= p_;
        }
        bool ok = which ? (wx == target && wy == target)
                        : (wx + wy == target);
        if (!ok) return false;
      }
    }
  }
  return true;
}

std::shared_ptr<const WittPolyTable> WittPolyTable::make(long p, long N) {
  auto t = std::make_shared<WittPolyTable>();
  t->p_ = p;
  t->N_ = N;
  t->sum_ = generate(p, N, false);
  t->prod_ = generate(p, N, true);
  return t;
}

std::shared_ptr<const WittPolyTable> witt_polynomials(long p, long N) {
  if (N < 1) throw domain_error("witt_polynomials: N must be >= 1");
  if (N > table_cap(p))
    throw precision_error(
        "witt_polynomials: symbolic table beyond the resource cap for this "
        "prime (arithmetic itself has no such cap)");
  std::lock_guard<std::mutex> lk(table_mtx);
  auto it = table_cache.find({p, N});
  if (it != table_cache.end()) return it->second;
  auto t = WittPolyTable::make(p, N);
  table_cache[{p, N}] = t;
  return t;
}

}  // namespace wr
