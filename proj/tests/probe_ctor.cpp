// dev probe: per-phase timing of the primitive-element constructor pipeline
#include <chrono>
#include <cstdio>

#include "wr/primitive.hpp"

using namespace wr;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  long p = 3, N = 4;
  NormConfig::Params ps;
  ps.p = p;
  ps.root_cap = 64;
  ps.win_lo = Rat(-512);
  ps.win_hi = Rat(2);
  auto cfg = NormConfig::make(ps);

  auto t0 = Clock::now();
  // standard cyclotomic: sum of Teichmullers of (1+pi)^{i/p}
  PerfLaurent one_pi = PerfLaurent::monomial(cfg, Rat(0), FqElem::one(cfg->fq())) + PerfLaurent::monomial(cfg, Rat(1), FqElem::one(cfg->fq()));
  PerfLaurent r = one_pi.pth_root();
  WittPl z = WittPl::zero(cfg, N);
  PerfLaurent acc = PerfLaurent::monomial(cfg, Rat(0), FqElem::one(cfg->fq()));
  for (long i = 0; i < p; ++i) {
    z = z + WittPl::teichmuller(cfg, N, acc);
    if (i + 1 < p) acc = acc * r;
  }
  std::printf("z build: %.1f ms\n", ms_since(t0));

  t0 = Clock::now();
  PerfLaurent zbar0 = z.coord(0);
  WittPl d = z - WittPl::teichmuller(cfg, N, zbar0);
  std::printf("z - [z0]: %.1f ms\n", ms_since(t0));

  t0 = Clock::now();
  WittPl s = d.div_by_p();
  std::printf("div_by_p: %.1f ms\n", ms_since(t0));

  t0 = Clock::now();
  WittPl w = s.w_invert();
  std::printf("w_invert: %.1f ms\n", ms_since(t0));

  t0 = Clock::now();
  WittPl sw = s * w;
  std::printf("s*w: %.1f ms\n", ms_since(t0));

  t0 = Clock::now();
  PerfLaurent z0i = zbar0.inverse();
  std::printf("zbar0 inverse: %.1f ms\n", ms_since(t0));

  t0 = Clock::now();
  WittPl pinv = -(WittPl::teichmuller(cfg, N, z0i) * s);
  std::printf("pinv mult+neg: %.1f ms\n", ms_since(t0));

  t0 = Clock::now();
  WittPl lhs = pinv.mul_by_p() + WittPl::teichmuller(cfg, N, z0i) * z;
  bool ok = witt_agrees(lhs, WittPl::one(cfg, N));
  std::printf("identity check: %.1f ms (ok=%d)\n", ms_since(t0), (int)ok);
  return 0;
}
