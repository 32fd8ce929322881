#include "wr/config.hpp"

#include <sstream>

namespace wr {

NormConfig::NormConfig(Params ps) : p_(ps.p) {
  if (ps.witt_len < 1) throw domain_error("config: witt-len must be >= 1");
  if (ps.root_cap < 0) throw domain_error("config: root-cap must be >= 0");
  if (ps.q_modulus.empty())
    fq_ = FqCtx::make(ps.p, 1);
  else
    fq_ = FqCtx::make(ps.p, std::move(ps.q_modulus));
  witt_len_ = ps.witt_len;
  root_cap_ = ps.root_cap;
  if (ps.c == 0)
    c_ = make_rat(p_, p_ - 1);
  else
    c_ = ps.c;
  if (c_ <= 0) throw domain_error("config: c must be positive");
  if (ps.win_lo >= ps.win_hi) throw domain_error("config: empty window");
  win_lo_ = ps.win_lo;
  win_hi_ = ps.win_hi;
  seed_ = ps.seed;
}

std::string NormConfig::describe() const {
  std::ostringstream os;
  os << "p: " << p_ << "\n";
  os << "q-modulus: ";
  const auto& g = fq_->modulus();
  for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  os << "\n";
  os << "q: " << "p^" << fq_->d() << "\n";
  os << "witt-len: " << witt_len_ << "\n";
  os << "root-cap: " << root_cap_ << "\n";
  os << "c: " << rat_str(c_) << "\n";
  os << "window: " << rat_str(win_lo_) << "," << rat_str(win_hi_) << "\n";
  os << "seed: " << seed_ << "\n";
  return os.str();
}

}  // namespace wr
