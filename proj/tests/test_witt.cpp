#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle_zpn.hpp"
#include "wr/witt.hpp"
#include "wr/wittpoly.hpp"

using namespace wr;

namespace {

ConfigPtr make_cfg(long p, long d = 1) {
  NormConfig::Params ps;
  ps.p = p;
  if (d > 1) ps.q_modulus = FqCtx::default_modulus(p, d);
  return NormConfig::make(ps);
}

std::vector<long> rand_coords(std::mt19937_64& rng, long p, long N) {
  std::vector<long> c((size_t)N);
  for (auto& x : c) x = (long)(rng() % (unsigned long)p);
  return c;
}

WittFq to_witt(const ConfigPtr& cfg, const std::vector<long>& coords) {
  std::vector<FqElem> t;
  for (long x : coords) t.push_back(FqElem::from_int(cfg->fq(), x));
  return WittFq(cfg, std::move(t));
}

std::vector<long> from_witt(const WittFq& w) {
  std::vector<long> c;
  for (const auto& t : w.coords()) c.push_back(t.coeffs()[0]);
  return c;
}

// sparse random series with small half-integral exponents
PerfLaurent rand_series(std::mt19937_64& rng, const ConfigPtr& cfg) {
  static const long num[] = {-2, -1, 0, 1, 2, 3, 1, 3};
  std::map<Rat, FqElem> t;
  long n_terms = (long)(rng() % 4);
  for (long k = 0; k < n_terms; ++k) {
    Rat e = make_rat(num[rng() % 8], (rng() % 2) ? cfg->p() : 1);
    FqElem c = FqElem::from_index(
        cfg->fq(), rng() % cfg->fq()->q_ulong());
    t[e] = c;
  }
  return PerfLaurent(cfg, std::move(t), Val::infinity());
}

WittPl rand_witt_pl(std::mt19937_64& rng, const ConfigPtr& cfg, long N) {
  std::vector<PerfLaurent> t;
  for (long i = 0; i < N; ++i) t.push_back(rand_series(rng, cfg));
  return WittPl(cfg, std::move(t));
}

}  // namespace

TEST_CASE("prime-field Witt arithmetic matches the residue-ring model") {
  std::mt19937_64 rng(20240817);
  for (long p : {2L, 3L, 5L}) {
    auto cfg = make_cfg(p);
    for (long N : {2L, 3L, 4L}) {
      wrtest::ZpnOracle oracle(p, N);
      for (int rep = 0; rep < 40; ++rep) {
        auto ca = rand_coords(rng, p, N), cb = rand_coords(rng, p, N);
        WittFq a = to_witt(cfg, ca), b = to_witt(cfg, cb);
        wrtest::Int za = oracle.encode(ca), zb = oracle.encode(cb);
        CHECK(from_witt(a + b) == oracle.decode(za + zb));
        CHECK(from_witt(a - b) == oracle.decode(za - zb));
        CHECK(from_witt(a * b) == oracle.decode(za * zb));
        CHECK(from_witt(-a) == oracle.decode(-za));
      }
    }
  }
}

TEST_CASE("one plus one over F_3 at length 2") {
  auto cfg = make_cfg(3);
  WittFq one = WittFq::one(cfg, 2);
  WittFq two = one + one;
  CHECK(from_witt(two) == std::vector<long>{2, 1});
}

TEST_CASE("integer embedding matches Teichmuller digits") {
  std::mt19937_64 rng(7);
  for (long p : {2L, 3L, 5L}) {
    auto cfg = make_cfg(p);
    for (long N : {1L, 3L, 5L}) {
      wrtest::ZpnOracle oracle(p, N);
      for (int rep = 0; rep < 10; ++rep) {
        long a = (long)(rng() % 100000) - 50000;
        WittFq w = WittFq::from_int(cfg, N, Int(a));
        CHECK(from_witt(w) == oracle.decode(wrtest::Int(a)));
      }
    }
  }
}

TEST_CASE("Witt arithmetic over F_4 and F_9 matches the unramified model") {
  std::mt19937_64 rng(99);
  for (long p : {2L, 3L}) {
    auto cfg = make_cfg(p, 2);
    std::vector<long> g(cfg->fq()->modulus());
    unsigned long q = cfg->fq()->q_ulong();
    for (long N : {2L, 3L}) {
      wrtest::ZqnOracle oracle(p, g, N);
      for (int rep = 0; rep < 25; ++rep) {
        std::vector<std::vector<long>> ca, cb;
        std::vector<FqElem> ta, tb;
        for (long i = 0; i < N; ++i) {
          FqElem xa = FqElem::from_index(cfg->fq(), rng() % q);
          FqElem xb = FqElem::from_index(cfg->fq(), rng() % q);
          ta.push_back(xa);
          tb.push_back(xb);
          ca.push_back(xa.coeffs());
          cb.push_back(xb.coeffs());
        }
        WittFq a(cfg, ta), b(cfg, tb);
        auto za = oracle.encode(ca), zb = oracle.encode(cb);
        auto sum = a + b, prod = a * b;
        auto o_sum = oracle.decode(oracle.add(za, zb));
        auto o_prod = oracle.decode(oracle.mul(za, zb));
        for (long i = 0; i < N; ++i) {
          CHECK(sum.coord(i).coeffs() == o_sum[(size_t)i]);
          CHECK(prod.coord(i).coeffs() == o_prod[(size_t)i]);
        }
      }
    }
  }
}

TEST_CASE("Teichmuller section is multiplicative") {
  auto cfg = make_cfg(3, 2);
  for (unsigned long i = 0; i < 9; ++i)
    for (unsigned long j = 0; j < 9; ++j) {
      FqElem a = FqElem::from_index(cfg->fq(), i);
      FqElem b = FqElem::from_index(cfg->fq(), j);
      CHECK(WittFq::teichmuller(cfg, 3, a) * WittFq::teichmuller(cfg, 3, b) ==
            WittFq::teichmuller(cfg, 3, a * b));
    }
}

TEST_CASE("shift operators against the residue model") {
  std::mt19937_64 rng(5);
  for (long p : {2L, 5L}) {
    auto cfg = make_cfg(p);
    long N = 4;
    wrtest::ZpnOracle oracle(p, N);
    for (int rep = 0; rep < 20; ++rep) {
      auto ca = rand_coords(rng, p, N);
      WittFq a = to_witt(cfg, ca);
      wrtest::Int za = oracle.encode(ca);
      CHECK(from_witt(a.mul_by_p()) == oracle.decode(za * p));
      // div_by_p undoes mul_by_p up to the dropped top coordinate
      auto back = a.mul_by_p().div_by_p();
      auto expect = ca;
      expect[(size_t)N - 1] = 0;
      CHECK(from_witt(back) == expect);
    }
    WittFq u = WittFq::one(cfg, N);
    CHECK_THROWS_AS(u.div_by_p(), domain_error);
  }
}

TEST_CASE("Frobenius is a ring endomorphism") {
  std::mt19937_64 rng(11);
  auto cfg = make_cfg(2, 2);
  long N = 3;
  auto rnd = [&] {
    std::vector<FqElem> t;
    for (long i = 0; i < N; ++i)
      t.push_back(FqElem::from_index(cfg->fq(), rng() % 4));
    return WittFq(cfg, t);
  };
  for (int rep = 0; rep < 20; ++rep) {
    WittFq a = rnd(), b = rnd();
    CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
    CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    CHECK(a.frobenius().inv_frobenius() == a);
  }
}

TEST_CASE("units invert") {
  std::mt19937_64 rng(13);
  for (long p : {2L, 3L}) {
    auto cfg = make_cfg(p);
    long N = 4;
    for (int rep = 0; rep < 20; ++rep) {
      auto ca = rand_coords(rng, p, N);
      if (ca[0] == 0) ca[0] = 1;
      WittFq a = to_witt(cfg, ca);
      CHECK(a * a.w_invert() == WittFq::one(cfg, N));
    }
  }
}

TEST_CASE("Witt ring axioms over perfected series coordinates") {
  std::mt19937_64 rng(20240818);
  for (long p : {2L, 3L}) {
    auto cfg = make_cfg(p);
    long N = 3;
    WittPl zero = WittPl::zero(cfg, N), one = WittPl::one(cfg, N);
    for (int rep = 0; rep < 12; ++rep) {
      WittPl a = rand_witt_pl(rng, cfg, N);
      WittPl b = rand_witt_pl(rng, cfg, N);
      WittPl c = rand_witt_pl(rng, cfg, N);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == zero);
      CHECK(a - b == a + (-b));
      CHECK(a * one == a);
      CHECK(a * zero == zero);
    }
  }
}

TEST_CASE("first carry polynomial in closed form") {
  // for x = [a], y = [b]: coordinate 1 of x + y is
  // (-sum_{0<i<p} binom(p,i)/p a^i b^(p-i))^(1/p)
  std::mt19937_64 rng(31);
  for (long p : {2L, 3L, 5L}) {
    auto cfg = make_cfg(p);
    for (int rep = 0; rep < 10; ++rep) {
      PerfLaurent a = rand_series(rng, cfg), b = rand_series(rng, cfg);
      WittPl s = WittPl::teichmuller(cfg, 2, a) + WittPl::teichmuller(cfg, 2, b);
      PerfLaurent expect = PerfLaurent::zero(cfg);
      for (long i = 1; i < p; ++i) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), (unsigned long)p, (unsigned long)i);
        Int coef = -(binom / p);
        long cmod = (long)mpz_fdiv_ui(coef.get_mpz_t(), (unsigned long)p);
        FqElem fc = FqElem::from_int(cfg->fq(), cmod);
        expect = expect + PerfLaurent::from_fq(cfg, fc) * a.pow_int(i) *
                              b.pow_int(p - i);
      }
      CHECK(s.coord(0) == a + b);
      CHECK(s.coord(1) == expect.pth_root());
    }
  }
}

TEST_CASE("truncation is a ring map and extension lifts it") {
  std::mt19937_64 rng(41);
  auto cfg = make_cfg(3);
  for (int rep = 0; rep < 10; ++rep) {
    WittPl a = rand_witt_pl(rng, cfg, 4), b = rand_witt_pl(rng, cfg, 4);
    CHECK((a + b).truncate(2) == a.truncate(2) + b.truncate(2));
    CHECK((a * b).truncate(2) == a.truncate(2) * b.truncate(2));
    CHECK(a.truncate(2).extend(4).truncate(2) == a.truncate(2));
  }
}

TEST_CASE("symbolic carry tables: frozen first-level anchors") {
  // S_0 = x_0 + y_0 and P~_0 = x_0 y_0
  for (long p : {2L, 3L, 5L}) {
    auto tab = witt_polynomials(p, 2);
    CHECK(tab->p() == p);
    CHECK(tab->sum_poly(0).t.size() == 2);
    CHECK(tab->prod_poly(0).t.size() == 1);
  }
  // first carry of a sum of Teichmuller lifts, frozen:
  // (a, b) -> coefficient of x_0^a y_0^b in S_1 restricted to x_0, y_0
  using M = std::map<std::pair<long, long>, long>;
  CHECK(witt_polynomials(2, 2)->single_sum(1) == M{{{1, 1}, 1}});
  CHECK(witt_polynomials(3, 2)->single_sum(1) == M{{{1, 2}, 2}, {{2, 1}, 2}});
  CHECK(witt_polynomials(5, 2)->single_sum(1) ==
        M{{{1, 4}, 4}, {{2, 3}, 3}, {{3, 2}, 3}, {{4, 1}, 4}});
}

TEST_CASE("symbolic carry tables: grading and homogeneity at the caps") {
  struct Cap {
    long p, N;
  };
  for (Cap c : {Cap{2, 6}, Cap{3, 4}, Cap{5, 4}}) {
    auto tab = witt_polynomials(c.p, c.N);
    CHECK(tab->isobaric_ok());
    for (long n = 0; n < c.N; ++n) CHECK(tab->single_sum_homogeneous(n));
  }
  CHECK_THROWS_AS(witt_polynomials(2, 7), precision_error);
  CHECK_THROWS_AS(witt_polynomials(3, 5), precision_error);
  CHECK_THROWS_AS(witt_polynomials(5, 5), precision_error);
}

TEST_CASE("symbolic tables agree with ghost arithmetic") {
  std::mt19937_64 rng(77);
  const long N = 3;
  for (long p : {2L, 3L}) {
    auto tab = witt_polynomials(p, N);
    for (long d : {1L, 2L}) {
      auto cfg = make_cfg(p, d);
      unsigned long q = cfg->fq()->q_ulong();
      auto embed = [&](long v) { return FqElem::from_int(cfg->fq(), v); };
      for (int rep = 0; rep < 8; ++rep) {
        std::vector<FqElem> ta, tb;
        for (long i = 0; i < N; ++i) {
          ta.push_back(FqElem::from_index(cfg->fq(), rng() % q));
          tb.push_back(FqElem::from_index(cfg->fq(), rng() % q));
        }
        WittFq a(cfg, ta), b(cfg, tb);
        // genuine components: i-th Teichmuller coordinate to the p^i
        std::vector<FqElem> ga, gb;
        for (long i = 0; i < N; ++i) {
          FqElem u = ta[(size_t)i], v = tb[(size_t)i];
          for (long k = 0; k < i; ++k) {
            u = u.pth_power();
            v = v.pth_power();
          }
          ga.push_back(u);
          gb.push_back(v);
        }
        WittFq s = a + b, m = a * b;
        for (long n = 0; n < N; ++n) {
          FqElem sg = s.coord(n), mg = m.coord(n);
          for (long k = 0; k < n; ++k) {
            sg = sg.pth_power();
            mg = mg.pth_power();
          }
          CHECK(sg == tab->eval(false, n, ga, gb, embed));
          CHECK(mg == tab->eval(true, n, ga, gb, embed));
        }
      }
    }
  }
}
