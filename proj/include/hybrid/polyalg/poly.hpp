#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hybrid/exactfield/interval.hpp"
#include "hybrid/exactfield/rational.hpp"

namespace hybrid {

/**
 * Dense univariate polynomial, constant term first. Trailing zeros are always
 * trimmed, so the zero polynomial has no coefficients and degree -1.
 */
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }  // NOLINT
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }
  static Polynomial x() { return Polynomial(std::vector<Coeff>{Coeff(0), Coeff(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coefficients() const { return c_; }
  /// Coefficient of x^i; zero beyond the degree.
  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Coeff> r(std::max(p.c_.size(), q.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Coeff> r(p.c_.size() + q.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& p) {
    std::vector<Coeff> r = p.c_;
    for (auto& c : r) c *= s;
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

  Coeff evaluate(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Coeff(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Coeff(0)) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using QPoly = Polynomial<Rational>;
using ZPoly = Polynomial<Integer>;

struct QDivision {
  QPoly quotient;
  QPoly remainder;
};

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
QDivision divmod(const QPoly& p, const QPoly& d);
/// Monic gcd over Q (zero if both inputs are zero).
QPoly gcd(const QPoly& p, const QPoly& q);
QPoly monic(const QPoly& p);
/// Squarefree part p / gcd(p, p'), made monic.
QPoly squarefree_part(const QPoly& p);
/// Yun's decomposition: returns (f_i, i) with p = lc * prod f_i^i, f_i monic squarefree.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

bool has_integer_coefficients(const QPoly& p);
QPoly to_qpoly(const ZPoly& p);
/// Primitive integer polynomial with positive leading coefficient proportional to p.
ZPoly primitive_part(const QPoly& p);
/// Requires integer coefficients. Throws std::domain_error otherwise.
ZPoly to_zpoly(const QPoly& p);

/// p(-x) scaled to be monic again when p is monic.
ZPoly reflect_monic(const ZPoly& p);

RealInterval evaluate(const QPoly& p, const RealInterval& x);

/// "[a0, a1, ..., ad]" with integer or p/q tokens.
std::string to_string(const QPoly& p);
std::string to_string(const ZPoly& p);
QPoly parse_qpoly(std::string_view text);
/// Human-friendly rendering such as "x^3 - x - 1".
std::string pretty(const QPoly& p);

}  // namespace hybrid
