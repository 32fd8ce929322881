#include "wr/rational.hpp"

namespace wr {

std::string Val::str() const {
  if (inf_) return "inf";
  return rat_str(v_);
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (!(std::isdigit((unsigned char)c) || c == '-' || c == '+' || c == '/'))
      throw parse_error("bad rational '" + s + "'");
  }
  try {
    Rat r(s);
    if (r.get_den() == 0) throw parse_error("zero denominator '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational '" + s + "'");
  }
}

Rat rat_pow_int(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  if (b == 0) {
    if (e < 0) throw domain_error("0^negative");
    return Rat(0);
  }
  Rat base = b;
  long k = e;
  if (k < 0) {
    base = 1 / base;
    k = -k;
  }
  Rat acc(1), sq = base;
  while (k > 0) {
    if (k & 1) acc *= sq;
    if (k >>= 1) sq *= sq;
  }
  return acc;
}

int cmp_pow(const Rat& b1, const Rat& e1, const Rat& b2, const Rat& e2) {
  if (b1 <= 0 || b2 <= 0) throw domain_error("cmp_pow: bases must be positive");
  // Clear exponent denominators: compare b1^(e1*L) with b2^(e2*L),
  // L = lcm of the denominators, which preserves order (t -> t^L is
  // monotone on positives).
  Int L;
  mpz_lcm(L.get_mpz_t(), e1.get_den().get_mpz_t(), e2.get_den().get_mpz_t());
  Rat f1 = e1 * Rat(L), f2 = e2 * Rat(L);
  if (f1.get_den() != 1 || f2.get_den() != 1)
    throw domain_error("cmp_pow: exponent clearing failed");
  if (!f1.get_num().fits_slong_p() || !f2.get_num().fits_slong_p())
    throw precision_error("cmp_pow: exponent too large");
  Rat lhs = rat_pow_int(b1, f1.get_num().get_si());
  Rat rhs = rat_pow_int(b2, f2.get_num().get_si());
  return cmp(lhs, rhs);
}

}  // namespace wr
