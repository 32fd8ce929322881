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
  PrimPtr z = PrimitiveEl::standard_cyclotomic(cfg);
  std::map<Rat, FqElem> m1{{make_rat(1, 3), FqElem::one(cfg->fq())}};
  std::vector<PerfLaurent> co;
  co.push_back(PerfLaurent::one(cfg) + PerfLaurent(cfg, m1, Val::infinity()));
  for (long i = 1; i < 3; ++i) co.push_back(PerfLaurent(cfg, m1, Val::infinity()));
  QuotientEl a = reduce_mod_z(RobbaEl(WittPl(cfg, co), 0), z);
  std::printf("mixed ok: %s\n", a.str().c_str());
  try {
    QuotientEl zz = reduce_mod_z(RobbaEl(z->z(), 0), z);
    std::printf("z ok: %s\n", zz.str().c_str());
  } catch (const std::exception& e) {
    std::printf("z threw: %s\n", e.what());
    // replay by hand
    RobbaEl xr(z->z(), 0);
    std::printf("robba shift=%ld len=%ld\n", xr.shift(), xr.len());
    WittPl x = xr.witt();
    for (long i = 0; i < x.len(); ++i)
      std::printf("  lift[%ld] = %s\n", i, x.coord(i).str().c_str());
    WittPl u = WittPl::zero(cfg, 3);
    for (long step = 0; step < 4; ++step) {
      bool allz = true;
      for (long i = 0; i < 3; ++i)
        if (!x.coord(i).is_zero()) allz = false;
      WittPl rhs = x + u * z->z();
      for (long i = 0; i < 3; ++i) {
        bool ok = xr.witt().coord(i).agrees(rhs.coord(i));
        std::printf("  step %ld coord %ld agrees=%d\n", step, i, (int)ok);
        if (!ok)
          std::printf("    orig: %s\n    rhs:  %s\n",
                      xr.witt().coord(i).str().c_str(),
                      rhs.coord(i).str().c_str());
      }
      if (allz) break;
      WittPl d = (x - WittPl::teichmuller(cfg, 3, x.coord(0))).div_by_p();
      WittPl wd = z->w() * d;
      u = u + wd;
      x = x - wd * z->z();
    }
  }
  return 0;
}
