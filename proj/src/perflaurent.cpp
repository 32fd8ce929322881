#include "wr/perflaurent.hpp"

#include <sstream>

namespace wr {

namespace {

bool den_divides_p_pow(const Rat& e, long p, long cap) {
  Int den = e.get_den();
  for (long i = 0;
       i < cap && mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)p); ++i)
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), (unsigned long)p);
  return den == 1;
}

Val val_scale(const Val& v, const Rat& s) {
  return v.is_inf() ? Val::infinity() : Val(v.finite() * s);
}

}  // namespace

PerfLaurent::PerfLaurent(ConfigPtr cfg, std::map<Rat, FqElem> terms, Val err)
    : cfg_(std::move(cfg)), terms_(std::move(terms)), err_(std::move(err)) {
  if (!cfg_) throw domain_error("PerfLaurent: null config");
  normalize();
}

void PerfLaurent::normalize() {
  long p = cfg_->p();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!it->second.ctx() || !it->second.ctx()->same(*cfg_->fq()))
      throw domain_error("PerfLaurent: coefficient from wrong field");
    if (!den_divides_p_pow(it->first, p, cfg_->root_cap()))
      throw domain_error("PerfLaurent: exponent denominator exceeds root cap");
    if (it->first < cfg_->win_lo())
      throw precision_error("PerfLaurent: exponent below window");
    if (it->second.is_zero()) {
      it = terms_.erase(it);
      continue;
    }
    if (it->first > cfg_->win_hi()) {
      err_ = min(err_, Val(it->first));
      it = terms_.erase(it);
      continue;
    }
    ++it;
  }
  // drop terms at or beyond the error exponent (they carry no information)
  if (!err_.is_inf()) {
    auto it = terms_.lower_bound(err_.finite());
    terms_.erase(it, terms_.end());
  }
}

PerfLaurent PerfLaurent::zero(ConfigPtr cfg) {
  return PerfLaurent(std::move(cfg), {}, Val::infinity());
}

PerfLaurent PerfLaurent::one(ConfigPtr cfg) {
  return from_fq(cfg, FqElem::one(cfg->fq()));
}

PerfLaurent PerfLaurent::from_fq(ConfigPtr cfg, const FqElem& c) {
  return monomial(std::move(cfg), Rat(0), c);
}

PerfLaurent PerfLaurent::monomial(ConfigPtr cfg, const Rat& e,
                                  const FqElem& c) {
  std::map<Rat, FqElem> t;
  if (!c.is_zero()) t.emplace(e, c);
  return PerfLaurent(std::move(cfg), std::move(t), Val::infinity());
}

PerfLaurent PerfLaurent::pi(ConfigPtr cfg) {
  return monomial(cfg, Rat(1), FqElem::one(cfg->fq()));
}

Val PerfLaurent::v_pi() const {
  if (terms_.empty()) return err_;
  return Val(terms_.begin()->first);
}

FqElem PerfLaurent::coeff(const Rat& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return FqElem::zero(cfg_->fq());
  return it->second;
}

FqElem PerfLaurent::leading_coeff() const {
  if (terms_.empty()) throw domain_error("leading_coeff of zero");
  return terms_.begin()->second;
}

void PerfLaurent::check(const PerfLaurent& o) const {
  if (!cfg_ || !o.cfg_ || !cfg_->same(*o.cfg_))
    throw domain_error("PerfLaurent: incompatible configs");
}

PerfLaurent PerfLaurent::operator+(const PerfLaurent& o) const {
  check(o);
  std::map<Rat, FqElem> t = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto it = t.find(e);
    if (it == t.end())
      t.emplace(e, c);
    else
      it->second = it->second + c;
  }
  return PerfLaurent(cfg_, std::move(t), min(err_, o.err_));
}

PerfLaurent PerfLaurent::operator-() const {
  std::map<Rat, FqElem> t = terms_;
  for (auto& [e, c] : t) c = -c;
  return PerfLaurent(cfg_, std::move(t), err_);
}

PerfLaurent PerfLaurent::operator-(const PerfLaurent& o) const {
  return *this + (-o);
}

PerfLaurent PerfLaurent::operator*(const PerfLaurent& o) const {
  check(o);
  Val err = min(err_ + o.v_pi(), o.err_ + v_pi());
  std::map<Rat, FqElem> t;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Rat e = e1 + e2;
      auto it = t.find(e);
      if (it == t.end())
        t.emplace(e, c1 * c2);
      else
        it->second = it->second + c1 * c2;
    }
  return PerfLaurent(cfg_, std::move(t), std::move(err));
}

bool PerfLaurent::operator==(const PerfLaurent& o) const {
  check(o);
  return terms_ == o.terms_ && err_ == o.err_;
}

bool PerfLaurent::agrees(const PerfLaurent& o) const {
  return (*this - o).is_zero();
}

PerfLaurent PerfLaurent::pth_power() const {
  std::map<Rat, FqElem> t;
  for (const auto& [e, c] : terms_)
    t.emplace(e * cfg_->p(), c.pth_power());
  return PerfLaurent(cfg_, std::move(t), val_scale(err_, Rat(cfg_->p())));
}

PerfLaurent PerfLaurent::pth_root() const {
  Rat inv_p = make_rat(1, cfg_->p());
  std::map<Rat, FqElem> t;
  for (const auto& [e, c] : terms_) {
    Rat e2 = e * inv_p;
    if (!den_divides_p_pow(e2, cfg_->p(), cfg_->root_cap()))
      throw domain_error("pth_root: exponent denominator exceeds root cap");
    t.emplace(e2, c.pth_root());
  }
  return PerfLaurent(cfg_, std::move(t), val_scale(err_, inv_p));
}

PerfLaurent PerfLaurent::pow_int(long e) const {
  if (e < 0) throw domain_error("pow_int: negative exponent");
  PerfLaurent acc = one(cfg_), sq = *this;
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    e >>= 1;
    if (e) sq = sq * sq;
  }
  return acc;
}

PerfLaurent PerfLaurent::with_error(const Rat& e) const {
  return PerfLaurent(cfg_, terms_, min(err_, Val(e)));
}

std::pair<PerfLaurent, PerfLaurent> PerfLaurent::split_at(const Rat& t) const {
  std::map<Rat, FqElem> lo(terms_.begin(), terms_.lower_bound(t));
  std::map<Rat, FqElem> hi(terms_.lower_bound(t), terms_.end());
  Val lo_err = err_ < Val(t) ? err_ : Val::infinity();
  Val hi_err = max(err_, Val(t));
  return {PerfLaurent(cfg_, std::move(lo), lo_err),
          PerfLaurent(cfg_, std::move(hi), hi_err)};
}

PerfLaurent PerfLaurent::inverse(std::optional<Rat> prec) const {
  if (terms_.empty()) throw domain_error("inverse of zero series");
  Rat v = terms_.begin()->first;
  PerfLaurent lead_inv =
      monomial(cfg_, -v, terms_.begin()->second.inverse());
  // x = lead * (1 + r); 1/x = lead_inv * sum (-r)^k
  PerfLaurent r = lead_inv * *this - one(cfg_);
  Val target = err_.is_inf() ? Val::infinity() : Val(err_.finite() - 2 * v);
  if (prec) target = min(target, Val(*prec));
  PerfLaurent acc = zero(cfg_);
  PerfLaurent term = lead_inv;
  for (long it = 0;; ++it) {
    acc = acc + term;
    if (term.is_zero()) break;
    if (!target.is_inf() && term.v_pi() >= target) break;
    term = term * (-r);
    if (it > 2000000)
      throw precision_error("inverse: series did not terminate");
  }
  if (!target.is_inf()) acc = acc.with_error(target.finite());
  return acc;
}

std::string PerfLaurent::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << c.str() << "*pi^(" << rat_str(e) << ")";
    first = false;
  }
  if (!err_.is_inf()) {
    if (!first) os << " + ";
    os << "O(pi^(" << rat_str(err_.finite()) << "))";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace wr
