#pragma once

#include <stdexcept>
#include <string>

#include "hybrid/exactfield/kelem.hpp"
#include "hybrid/exactfield/tower.hpp"
#include "hybrid/polyalg/poly.hpp"

namespace hybrid {

enum class Branch { plus, minus };

/// The enclosure handed to factor selection meets more than one root.
class CoarseInterval : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A real root of x^2 - trace*x + norm over k, selected by branch:
 * (trace +- sqrt(trace^2 - 4 norm)) / 2 under the distinguished embedding.
 */
class QuadAlgNum {
 public:
  /// Throws std::invalid_argument when the discriminant is negative.
  QuadAlgNum(KElem trace, KElem norm, Branch branch, mpfr_prec_t precision = 128);

  /// The element r itself, as the double root of (x - r)^2.
  static QuadAlgNum from_k(const KElem& r, mpfr_prec_t precision = 128);

  const KElem& trace() const { return trace_; }
  const KElem& norm() const { return norm_; }
  Branch branch() const { return branch_; }
  const RealInterval& numeric() const { return numeric_; }
  KElem discriminant() const { return trace_ * trace_ - KElem(4) * norm_; }

  QuadAlgNum refined(mpfr_prec_t precision) const { return {trace_, norm_, branch_, precision}; }

 private:
  KElem trace_;
  KElem norm_;
  Branch branch_;
  RealInterval numeric_;
};

/// Root of x^2 - trace*x + norm whose branch matches the given enclosure.
/// Throws CoarseInterval when the enclosure does not single out one root.
QuadAlgNum quadratic_root_near(const KElem& trace, const KElem& norm, const RealInterval& near);

/// Minimal polynomial over Q plus a certified enclosure of the chosen root.
struct AlgebraicReal {
  QPoly minpoly;
  RealInterval enclosure;
};

/// Eliminant res_y(x^2 - T(y) x + N(y), y^2 - 2) in Q[x], vanishing at the root.
QPoly eliminant(const QuadAlgNum& lambda);

/**
 * Monic irreducible factor of f that vanishes inside the enclosure. Candidate
 * factors come from subsets of high-precision root discs of the squarefree
 * part, closed under complex conjugation, with integer rounding of the scaled
 * coefficients and exact division as verification. Throws CoarseInterval when
 * the enclosure meets more than one root or the complementary factor also
 * vanishes on it.
 */
QPoly select_minimal_factor(const QPoly& f, const RealInterval& enclosure, mpfr_prec_t precision);

/// Minimal polynomial of lambda over Q; escalates precision a bounded number
/// of times before throwing std::runtime_error.
AlgebraicReal minpoly_over_Q(const QuadAlgNum& lambda);

/// Minimal polynomial over Q of the product lambda*mu, via the composed
/// resultant res_z(z^d p(x/z), q(z)) of their minimal polynomials.
AlgebraicReal product(const QuadAlgNum& lambda, const QuadAlgNum& mu);

/// Characteristic polynomial over Q of x in K = Q(sqrt 2, sqrt a) (degree 4),
/// or over k when x carries no tower (degree 2).
QPoly charpoly_over_Q(const TowerElem& x);
/// Minimal polynomial over Q; K is Galois over Q so this is the squarefree
/// part of the characteristic polynomial.
QPoly minpoly_over_Q(const TowerElem& x);

/// True iff p is monic with integer coefficients. p must be a minimal polynomial.
bool is_algebraic_integer(const QPoly& minimal);
bool is_algebraic_integer(const QuadAlgNum& lambda);
bool is_algebraic_integer(const TowerElem& x);

}  // namespace hybrid
