#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "hybrid/exactfield/interval.hpp"
#include "hybrid/exactfield/rational.hpp"

namespace hybrid {

/**
 * Element a + b*sqrt(2) of the real quadratic field k = Q(sqrt 2).
 *
 * The representation is unique once a and b are canonical rationals. All
 * real-valued notions (sign, embed) refer to the embedding sqrt(2) -> +1.414...
 */
class KElem {
 public:
  KElem() = default;
  KElem(long n) : a_(n), b_(0) {}  // NOLINT(google-explicit-constructor)
  KElem(const Rational& a) : a_(a), b_(0) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  KElem(Rational a, Rational b);

  static KElem sqrt2() { return KElem(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  /// Both coordinates are integers, i.e. the element lies in Z[sqrt 2].
  bool has_integer_coordinates() const { return is_integer(a_) && is_integer(b_); }

  KElem operator-() const { return KElem(-a_, -b_); }
  KElem& operator+=(const KElem& y);
  KElem& operator-=(const KElem& y);
  KElem& operator*=(const KElem& y);
  KElem& operator/=(const KElem& y);

  friend KElem operator+(KElem x, const KElem& y) { return x += y; }
  friend KElem operator-(KElem x, const KElem& y) { return x -= y; }
  friend KElem operator*(KElem x, const KElem& y) { return x *= y; }
  friend KElem operator/(KElem x, const KElem& y) { return x /= y; }
  friend bool operator==(const KElem& x, const KElem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const KElem& x, const KElem& y) { return !(x == y); }

  KElem inverse() const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const KElem& x) { return os << x.to_string(); }

 private:
  Rational a_;
  Rational b_;
};

/// a + b*sqrt2 -> a - b*sqrt2.
KElem galois_conjugate(const KElem& x);

/// Field norm x * conj(x) = a^2 - 2b^2.
Rational norm_k(const KElem& x);

/// Exact sign under the distinguished real embedding.
int sign(const KElem& x);

/// max(|p|, q) over the nonzero coordinates p/q; zero has height 0.
Integer height(const KElem& x);

struct SquareTest {
  bool is_square = false;
  std::optional<KElem> root;  // satisfies root^2 = x, and root >= 0
};

/// Decides whether x is a square in k and returns the non-negative root.
SquareTest is_square_in_k(const KElem& x);

/// Certified enclosure of x under the distinguished embedding.
RealInterval embed(const KElem& x, mpfr_prec_t precision);

/// Parses the canonical text form ("p/q", "p/q+r/s*rt2", or any sum/product
/// of rationals and rt2). Throws std::invalid_argument.
KElem parse_kelem(std::string_view text);

}  // namespace hybrid
