#include <cstdio>

#include "wr/primitive.hpp"

using namespace wr;

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  NormConfig::Params ps;
  ps.p = 3;
  ps.witt_len = 3;
  ps.root_cap = 64;
  ps.win_lo = Rat(-8);
  ps.win_hi = Rat(3);
  auto cfg = NormConfig::make(ps);
  PrimPtr pz = PrimitiveEl::standard_cyclotomic(cfg);
  long N = 3;
  WittPl x = pz->z();
  WittPl u = WittPl::zero(cfg, N);
  for (long step = 0; step < 8; ++step) {
    bool allz = true;
    for (long i = 0; i < N; ++i)
      if (!x.coord(i).is_zero()) allz = false;
    std::printf("step %ld: allzero=%d\n", step, (int)allz);
    for (long i = 0; i < N; ++i)
      std::printf("  x[%ld] = %s\n", i, x.coord(i).str().c_str());
    WittPl rhs = x + u * pz->z();  // x here is the residual: orig = x + u z
    for (long i = 0; i < N; ++i) {
      bool ok = pz->z().coord(i).agrees(rhs.coord(i));
      if (!ok)
        std::printf("  MISMATCH coord %ld:\n    orig: %s\n    rhs:  %s\n", i,
                    pz->z().coord(i).str().c_str(), rhs.coord(i).str().c_str());
    }
    if (allz) break;
    WittPl d = (x - WittPl::teichmuller(cfg, N, x.coord(0))).div_by_p();
    WittPl wd = pz->w() * d;
    u = u + wd;
    x = x - wd * pz->z();
  }
  return 0;
}
