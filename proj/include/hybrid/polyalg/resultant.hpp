#pragma once

#include <vector>

#include "hybrid/polyalg/poly.hpp"

namespace hybrid {

/// Resultant of two nonzero polynomials (Sylvester determinant), computed by
/// the subresultant pseudo-remainder sequence. Throws std::invalid_argument on
/// a zero input.
Rational resultant(const QPoly& p, const QPoly& q);

/// Polynomial in y whose coefficients are polynomials in x, constant term first.
using BivariatePoly = std::vector<QPoly>;

/// res_y(P(x, y), Q(x, y)) as a polynomial in x, by evaluation at integer
/// points where neither leading y-coefficient vanishes, followed by exact
/// interpolation.
QPoly resultant_in_y(const BivariatePoly& p, const BivariatePoly& q);

/// Newton interpolation through (xs[i], ys[i]); xs must be distinct.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace hybrid
