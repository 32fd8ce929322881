#include <cstdio>
#include <map>
#include <string>

#include "wr/primitive.hpp"

using namespace wr;

// terms of a below min(err_a, cap), as exponent-string -> digit string
static std::map<std::string, std::string> low_terms(const PerfLaurent& a,
                                                    const Rat& cap) {
  Rat lim = cap;
  if (!a.err().is_inf() && a.err().finite() < lim) lim = a.err().finite();
  std::map<std::string, std::string> out;
  for (const auto& [e, c] : a.terms())
    if (e < lim) out[rat_str(e)] = std::to_string(c.coeffs()[0]);
  return out;
}

static void cmp(const char* tag, const PerfLaurent& narrow,
                const PerfLaurent& wide) {
  Rat cap = narrow.err().is_inf() ? Rat(1000) : narrow.err().finite();
  auto a = low_terms(narrow, cap), b = low_terms(wide, cap);
  if (a != b) {
    std::printf("UNSOUND %s\n  narrow: %s\n  wide:   %s\n", tag,
                narrow.str().c_str(), wide.str().c_str());
  } else {
    std::printf("ok %s (err=%s, %zu low terms)\n", tag,
                narrow.err().str().c_str(), a.size());
  }
}

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  NormConfig::Params p1, p2;
  p1.p = p2.p = 3;
  p1.witt_len = p2.witt_len = 3;
  p1.root_cap = p2.root_cap = 64;
  p1.win_lo = Rat(-8);
  p1.win_hi = Rat(3);
  p2.win_lo = Rat(-32);
  p2.win_hi = Rat(12);
  auto cn = NormConfig::make(p1);
  auto cw = NormConfig::make(p2);
  PrimPtr zn = PrimitiveEl::standard_cyclotomic(cn);
  PrimPtr zw = PrimitiveEl::standard_cyclotomic(cw);
  for (long i = 0; i < 3; ++i) {
    char t[32];
    std::snprintf(t, sizeof t, "z[%ld]", i);
    cmp(t, zn->z().coord(i), zw->z().coord(i));
  }
  for (long i = 0; i < 3; ++i) {
    char t[32];
    std::snprintf(t, sizeof t, "s[%ld]", i);
    cmp(t, zn->s().coord(i), zw->s().coord(i));
  }
  for (long i = 0; i < 3; ++i) {
    char t[32];
    std::snprintf(t, sizeof t, "w[%ld]", i);
    cmp(t, zn->w().coord(i), zw->w().coord(i));
  }
  // one reduction step of x = z by hand in both configs
  auto step = [](const PrimitiveEl& pz, const WittPl& x, WittPl& xo,
                 WittPl& wdo) {
    auto cfg = pz.cfg();
    WittPl d = (x - WittPl::teichmuller(cfg, x.len(), x.coord(0))).div_by_p();
    WittPl wd = pz.w() * d;
    xo = x - wd * pz.z();
    wdo = wd;
  };
  WittPl x1n, wdn, x1w, wdw;
  step(*zn, zn->z(), x1n, wdn);
  step(*zw, zw->z(), x1w, wdw);
  for (long i = 0; i < 3; ++i) {
    char t[32];
    std::snprintf(t, sizeof t, "wd[%ld]", i);
    cmp(t, wdn.coord(i), wdw.coord(i));
  }
  for (long i = 0; i < 3; ++i) {
    char t[32];
    std::snprintf(t, sizeof t, "x1[%ld]", i);
    cmp(t, x1n.coord(i), x1w.coord(i));
  }
  // the witness recombination x1 + wd*z in both configs
  WittPl rn = x1n + wdn * zn->z();
  WittPl rw = x1w + wdw * zw->z();
  for (long i = 0; i < 3; ++i) {
    char t[32];
    std::snprintf(t, sizeof t, "x1+wd*z[%ld]", i);
    cmp(t, rn.coord(i), rw.coord(i));
  }
  return 0;
}
