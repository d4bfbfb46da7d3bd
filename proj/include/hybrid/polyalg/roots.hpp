#pragma once

#include <vector>

#include "hybrid/exactfield/interval.hpp"
#include "hybrid/polyalg/poly.hpp"

namespace hybrid {

/// Complex number with MPFR components (round-to-nearest arithmetic).
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t precision = 128) : re(precision), im(precision) {}
  BigComplex(double r, double i, mpfr_prec_t precision) : re(r, precision), im(i, precision) {}

  mpfr_prec_t precision() const { return re.precision(); }
};

BigComplex operator+(const BigComplex& x, const BigComplex& y);
BigComplex operator-(const BigComplex& x, const BigComplex& y);
BigComplex operator*(const BigComplex& x, const BigComplex& y);
BigComplex operator/(const BigComplex& x, const BigComplex& y);
BigFloat modulus(const BigComplex& z);

/// Approximate root together with a radius such that the disc around it
/// contains exactly one root of the polynomial.
struct RootDisc {
  BigComplex center;
  BigFloat radius;
};

/**
 * All roots of a squarefree polynomial of degree >= 1, by Aberth-Ehrlich
 * iteration at the given working precision. Radii come from the Weierstrass
 * corrections (d * |w_i|); when the discs are pairwise disjoint each holds
 * exactly one root. Throws std::runtime_error when the iteration stalls or
 * the discs overlap.
 */
std::vector<RootDisc> isolate_roots(const QPoly& squarefree, mpfr_prec_t precision);

/// Fast double-precision Aberth roots (no certification); used for pre-filtering.
std::vector<std::pair<double, double>> approximate_roots(const std::vector<double>& coeffs);

}  // namespace hybrid
