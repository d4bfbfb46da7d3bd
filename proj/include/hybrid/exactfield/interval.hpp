#pragma once

#include <mpfr.h>

#include <string>

#include "hybrid/exactfield/rational.hpp"

namespace hybrid {

/// RAII handle for an MPFR floating-point value.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 128);
  BigFloat(double value, mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with outward-rounded endpoints. Every operation
/// returns an interval containing all exact results for exact inputs in the
/// operand intervals.
class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t precision = 128);

  static RealInterval point(const Rational& q, mpfr_prec_t precision);
  static RealInterval point(double x, mpfr_prec_t precision);
  static RealInterval from_bounds(const BigFloat& lo, const BigFloat& hi);
  static RealInterval sqrt2(mpfr_prec_t precision);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  double lower() const { return lo_.to_double(MPFR_RNDD); }
  double upper() const { return hi_.to_double(MPFR_RNDU); }
  double midpoint() const;
  double width() const;

  bool contains(double x) const;
  bool contains(const RealInterval& other) const;
  bool overlaps(const RealInterval& other) const;
  bool contains_zero() const;
  bool strictly_positive() const;
  bool strictly_negative() const;
  bool less_than(double x) const { return upper() < x; }

  /// Decimal rendering "[lo, hi]" with the given number of significant digits.
  std::string to_string(int digits = 17) const;

  RealInterval operator-() const;
  friend RealInterval operator+(const RealInterval& x, const RealInterval& y);
  friend RealInterval operator-(const RealInterval& x, const RealInterval& y);
  friend RealInterval operator*(const RealInterval& x, const RealInterval& y);
  friend RealInterval operator/(const RealInterval& x, const RealInterval& y);

 private:
  BigFloat lo_;
  BigFloat hi_;
};

RealInterval hull(const RealInterval& x, const RealInterval& y);
RealInterval abs(const RealInterval& x);
RealInterval sqrt(const RealInterval& x);
RealInterval exp(const RealInterval& x);
RealInterval log(const RealInterval& x);
RealInterval cosh(const RealInterval& x);
RealInterval sinh(const RealInterval& x);
RealInterval acosh(const RealInterval& x);
RealInterval acos(const RealInterval& x);
/// x^(1/4) for x >= 0.
RealInterval root4(const RealInterval& x);

}  // namespace hybrid
