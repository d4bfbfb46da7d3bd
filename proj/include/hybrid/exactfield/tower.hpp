#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "hybrid/exactfield/kelem.hpp"

namespace hybrid {

/// The quartic field K = k(sqrt a) for a fixed admissible rational a.
class TowerField {
 public:
  /// Throws std::invalid_argument unless a > 0 and a is not a square in k.
  static std::shared_ptr<const TowerField> create(const Rational& a);

  const Rational& a() const { return a_; }

 private:
  explicit TowerField(Rational a) : a_(std::move(a)) {}
  Rational a_;
};

using FieldPtr = std::shared_ptr<const TowerField>;

/**
 * Element u + v*sqrt(a) of K = k(sqrt a).
 *
 * Elements with v = 0 may carry no field and then combine with elements of any
 * tower; two elements bound to towers with different a cannot be combined.
 */
class TowerElem {
 public:
  TowerElem() = default;
  TowerElem(long n) : u_(n) {}  // NOLINT(google-explicit-constructor)
  TowerElem(KElem u) : u_(std::move(u)) {}  // NOLINT(google-explicit-constructor)
  TowerElem(KElem u, KElem v, FieldPtr field);

  static TowerElem sqrt_a(FieldPtr field) { return TowerElem(KElem(), KElem(1), std::move(field)); }

  const KElem& k_part() const { return u_; }
  const KElem& sqrt_a_part() const { return v_; }
  const FieldPtr& field() const { return field_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool in_k() const { return v_.is_zero(); }

  TowerElem operator-() const { return TowerElem(-u_, -v_, field_); }
  TowerElem& operator+=(const TowerElem& y);
  TowerElem& operator-=(const TowerElem& y);
  TowerElem& operator*=(const TowerElem& y);
  TowerElem& operator/=(const TowerElem& y);

  friend TowerElem operator+(TowerElem x, const TowerElem& y) { return x += y; }
  friend TowerElem operator-(TowerElem x, const TowerElem& y) { return x -= y; }
  friend TowerElem operator*(TowerElem x, const TowerElem& y) { return x *= y; }
  friend TowerElem operator/(TowerElem x, const TowerElem& y) { return x /= y; }
  friend bool operator==(const TowerElem& x, const TowerElem& y) {
    return x.u_ == y.u_ && x.v_ == y.v_;
  }
  friend bool operator!=(const TowerElem& x, const TowerElem& y) { return !(x == y); }

  TowerElem inverse() const;

  /// "(u)+(v)*rtA", or the k-form of u when v = 0.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const TowerElem& x) { return os << x.to_string(); }

 private:
  KElem u_;
  KElem v_;
  FieldPtr field_;
};

/// Shared field of two operands; throws std::invalid_argument on a mismatch.
FieldPtr common_field(const FieldPtr& x, const FieldPtr& y);

/// u + v*sqrt(a) -> u - v*sqrt(a) (conjugation over k).
TowerElem conjugate_over_k(const TowerElem& x);

int sign(const TowerElem& x);
RealInterval embed(const TowerElem& x, mpfr_prec_t precision);

/// Parses tower text; "rtA" requires a field. Throws std::invalid_argument.
TowerElem parse_tower(std::string_view text, const FieldPtr& field);

}  // namespace hybrid
