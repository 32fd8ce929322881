#pragma once

// Independent reference models for truncated Witt vectors, used only by
// tests.  W_N(F_p) is modeled as Z/p^N and W_N(F_q) as Z[y]/(g~, p^N),
// with the Teichmuller section computed by Frobenius stabilization:
// tau(t) = t~^(q^(N-1)) mod p^N.  Elements decode to Teichmuller digit
// vectors greedily: strip the residue's Teichmuller lift, divide by p,
// repeat.  Nothing here shares code with the library's ghost-side
// arithmetic; agreement between the two is a genuine cross-check.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace wrtest {

using Int = mpz_class;

inline Int pow_mod(Int b, Int e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// W_N(F_p) as Z/p^N
struct ZpnOracle {
  long p, N;
  Int pn;  // p^N

  ZpnOracle(long p_, long N_) : p(p_), N(N_) {
    mpz_ui_pow_ui(pn.get_mpz_t(), (unsigned long)p, (unsigned long)N);
  }

  Int norm(Int z) const {
    z %= pn;
    if (z < 0) z += pn;
    return z;
  }
  Int teich(long t) const {
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)p, (unsigned long)(N - 1));
    return pow_mod(Int(t), e, pn);
  }
  Int encode(const std::vector<long>& coords) const {
    Int z = 0, ppow = 1;
    for (long i = 0; i < (long)coords.size(); ++i) {
      z += ppow * teich(coords[(size_t)i]);
      ppow *= p;
    }
    return norm(z);
  }
  std::vector<long> decode(Int z) const {
    z = norm(z);
    std::vector<long> coords;
    Int modulus = pn;
    for (long i = 0; i < N; ++i) {
      long t = mpz_fdiv_ui(z.get_mpz_t(), (unsigned long)p);
      // Teichmuller lift of t inside Z/(p^(N-i))
      ZpnOracle sub(p, N - i);
      Int tau = sub.teich(t);
      z -= tau;
      z %= modulus;
      if (z < 0) z += modulus;
      if (mpz_fdiv_ui(z.get_mpz_t(), (unsigned long)p) != 0)
        throw std::logic_error("ZpnOracle: digit strip not divisible");
      z /= p;
      modulus /= p;
      coords.push_back(t);
    }
    return coords;
  }
};

// W_N(F_q) as Z[y]/(g~, p^N); elements are digit vectors of length d
struct ZqnOracle {
  long p, d, N;
  std::vector<long> g;  // monic, length d+1, digits in [0, p)
  Int pn;

  using El = std::vector<Int>;

  ZqnOracle(long p_, std::vector<long> g_, long N_)
      : p(p_), d((long)g_.size() - 1), N(N_), g(std::move(g_)) {
    mpz_ui_pow_ui(pn.get_mpz_t(), (unsigned long)p, (unsigned long)N);
  }

  El norm(El a) const {
    a.resize((size_t)d, Int(0));
    for (auto& x : a) {
      x %= pn;
      if (x < 0) x += pn;
    }
    return a;
  }
  El zero() const { return El((size_t)d, Int(0)); }
  El add(const El& a, const El& b) const {
    El r = a;
    for (long i = 0; i < d; ++i) r[(size_t)i] += b[(size_t)i];
    return norm(r);
  }
  El neg(const El& a) const {
    El r = a;
    for (auto& x : r) x = -x;
    return norm(r);
  }
  El mul(const El& a, const El& b) const {
    std::vector<Int> r((size_t)(2 * d - 1), Int(0));
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j)
        r[(size_t)(i + j)] += a[(size_t)i] * b[(size_t)j];
    // reduce by monic g~ over Z, then mod p^N
    for (long i = 2 * d - 2; i >= d; --i) {
      Int top = r[(size_t)i];
      if (top == 0) continue;
      for (long j = 0; j <= d; ++j) r[(size_t)(i - d + j)] -= top * g[(size_t)j];
    }
    r.resize((size_t)d);
    return norm(r);
  }
  El pow(El b, Int e) const {
    El acc = zero();
    acc[0] = 1;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, b);
      e >>= 1;
      if (e > 0) b = mul(b, b);
    }
    return acc;
  }
  // Teichmuller lift of the residue digit vector t (entries in [0,p))
  El teich(const std::vector<long>& t) const {
    El x(zero());
    for (long i = 0; i < d; ++i) x[(size_t)i] = t[(size_t)i];
    Int e;  // q^(N-1)
    mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)p,
                  (unsigned long)(d * (N - 1)));
    return pow(x, e);
  }
  El encode(const std::vector<std::vector<long>>& coords) const {
    El z = zero();
    Int ppow = 1;
    for (const auto& t : coords) {
      El tau = teich(t);
      for (auto& x : tau) x *= ppow;
      z = add(z, norm(tau));
      ppow *= p;
    }
    return z;
  }
  std::vector<std::vector<long>> decode(El z) const {
    z = norm(z);
    std::vector<std::vector<long>> coords;
    for (long i = 0; i < N; ++i) {
      std::vector<long> t((size_t)d);
      for (long j = 0; j < d; ++j)
        t[(size_t)j] = (long)mpz_fdiv_ui(z[(size_t)j].get_mpz_t(),
                                         (unsigned long)p);
      ZqnOracle sub(p, g, N - i);
      El tau = sub.teich(t);
      for (long j = 0; j < d; ++j) {
        Int x = z[(size_t)j] - tau[(size_t)j];
        x %= sub.pn;
        if (x < 0) x += sub.pn;
        if (!mpz_divisible_ui_p(x.get_mpz_t(), (unsigned long)p))
          throw std::logic_error("ZqnOracle: digit strip not divisible");
        z[(size_t)j] = x / p;
      }
      coords.push_back(t);
    }
    return coords;
  }
};

}  // namespace wrtest
