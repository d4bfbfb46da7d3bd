#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hybrid {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact square root of a non-negative rational, if it is a rational square.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Exact square root of a non-negative integer, if it is a perfect square.
std::optional<Integer> integer_sqrt(const Integer& z);

bool is_integer(const Rational& q);

/// Canonical text: "p" or "p/q" with q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace hybrid
