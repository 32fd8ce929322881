#include <chrono>
#include <cstdio>

#include "wr/primitive.hpp"

using namespace wr;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

static void probe(long p, long N, long lo, long hi) {
  NormConfig::Params ps;
  ps.p = p;
  ps.witt_len = N;
  ps.root_cap = 64;
  ps.win_lo = Rat(lo);
  ps.win_hi = Rat(hi);
  auto cfg = NormConfig::make(ps);
  std::printf("== p=%ld N=%ld win=[%ld,%ld]\n", p, N, lo, hi);
  auto t0 = Clock::now();
  PrimPtr z = PrimitiveEl::standard_cyclotomic(cfg);
  std::printf("  construct: %.1f ms\n", ms_since(t0));
  for (long i = 0; i < N; ++i)
    std::printf("  s[%ld]=%zu w[%ld]=%zu pinv[%ld]=%zu\n", i,
                z->s().coord(i).terms().size(), i,
                z->w().coord(i).terms().size(), i,
                z->p_inverse().coord(i).terms().size());
  t0 = Clock::now();
  std::map<Rat, FqElem> m1{{make_rat(1, p), FqElem::one(cfg->fq())}};
  std::vector<PerfLaurent> co;
  co.push_back(PerfLaurent::one(cfg) + PerfLaurent(cfg, m1, Val::infinity()));
  for (long i = 1; i < N; ++i) co.push_back(PerfLaurent(cfg, m1, Val::infinity()));
  QuotientEl a = reduce_mod_z(RobbaEl(WittPl(cfg, co), 0), z);
  std::printf("  reduce(mixed): %.1f ms, y0 terms=%zu\n", ms_since(t0),
              a.rep().coord(0).terms().size());
  t0 = Clock::now();
  QuotientEl zz = reduce_mod_z(RobbaEl(z->z(), 0), z);
  std::printf("  reduce(z): %.1f ms, zero=%d\n", ms_since(t0),
              (int)zz.is_zero_rep());
  t0 = Clock::now();
  QuotientEl m = q_mul(a, a);
  std::printf("  q_mul: %.1f ms\n", ms_since(t0));
}

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  probe(2, 2, -512, 12);
  probe(3, 2, -512, 4);
  probe(2, 4, -512, 12);
  probe(3, 3, -512, 3);
  probe(3, 4, -512, 3);
  probe(3, 4, -512, 2);
  return 0;
}
