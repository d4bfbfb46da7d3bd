#pragma once

#include <vector>

#include "hybrid/polyalg/poly.hpp"

namespace hybrid {

/// Polynomials whose computed measure is below 1 + kMeasureOneGap are treated
/// as measure 1, subject to the exact Kronecker cross-check.
inline constexpr double kMeasureOneGap = 1e-8;

/// |leading| * prod max(1, |root|), accurate to within tol. Throws
/// std::invalid_argument on the zero polynomial and std::runtime_error if root
/// refinement does not reach tol at the maximum precision.
double mahler_measure(const ZPoly& p, double tol = 1e-12);

/// Exact test that a monic integer polynomial has Mahler measure 1, i.e. is a
/// product of cyclotomic polynomials and powers of x (Kronecker). Iterates the
/// Graeffe root-squaring map until a coefficient exceeds its binomial bound or
/// the sequence of iterates cycles.
bool is_kronecker(const ZPoly& monic);

/**
 * Monic integer polynomials of degree 1..max_degree with Mahler measure at
 * most bound (plus a guard band of width tol), in lexicographic order of
 * (degree, a_0, a_1, ...). The box uses |a_(d-i)| <= C(d, i) * bound.
 */
std::vector<ZPoly> enumerate_bounded(int max_degree, double bound, double tol = 1e-9);

struct MahlerMinimum {
  double value = 0;
  ZPoly witness;
  /// log(value): the systole gap constant for this degree bound.
  double epsilon = 0;
};

/// Smallest Mahler measure above 1 + kMeasureOneGap over monic integer
/// polynomials of degree <= max_degree. Ties (within 1e-9) prefer lower degree,
/// then lexicographically smaller coefficient lists.
MahlerMinimum min_mahler_above_one(int max_degree);

}  // namespace hybrid
