#include "cartankit/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace cartan {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!valid_integer(num))
    throw std::invalid_argument("Rat::parse: malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rat(mpq_class(parse_integer(num)));
  const std::string_view den = text.substr(slash + 1);
  if (!valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("Rat::parse: malformed rational '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("Rat::parse: zero denominator in '" + std::string(text) + "'");
  return Rat(mpq_class(parse_integer(num), d));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rat::hash() const {
  // Low limbs of numerator and denominator are enough to spread buckets.
  const auto limb = [](const mpz_class& z) -> std::size_t {
    if (z == 0) return 0;
    return static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) * (sgn(z) < 0 ? 31u : 17u);
  };
  return limb(v_.get_num()) * 1000003u ^ limb(v_.get_den());
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow2(int k) {
  mpz_class p = 1;
  p <<= static_cast<unsigned long>(k < 0 ? -k : k);
  return k < 0 ? Rat(mpq_class(mpz_class(1), p)) : Rat(mpq_class(p));
}

}  // namespace cartan
