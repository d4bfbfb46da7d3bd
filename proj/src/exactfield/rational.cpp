#include "hybrid/exactfield/rational.hpp"

#include <stdexcept>

namespace hybrid {

std::optional<Integer> integer_sqrt(const Integer& z) {
  if (sgn(z) < 0 || mpz_perfect_square_p(z.get_mpz_t()) == 0) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
  return root;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  auto num = integer_sqrt(q.get_num());
  if (!num) return std::nullopt;
  auto den = integer_sqrt(q.get_den());
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace hybrid
