#pragma once

#include <stdexcept>

#include "hybrid/exactfield/kelem.hpp"
#include "hybrid/lorentz/form.hpp"
#include "hybrid/polyalg/algnum.hpp"

namespace hybrid {

/**
 * Element of the one-parameter subgroup of O'(f) acting on the (x_1, x_(n+1))
 * plane of f = c x_1^2 + x_2^2 + ... + x_n^2 - sqrt(2) x_(n+1)^2:
 *
 *   [ alpha          sqrt(2) gamma / c ]
 *   [        I_(n-1)                   ]
 *   [ gamma                alpha       ]
 *
 * with c alpha^2 - sqrt(2) gamma^2 = c.
 */
class ABlockElement {
 public:
  /// Throws std::invalid_argument if the invariant fails, c <= 0 or n < 1.
  ABlockElement(KElem alpha, KElem gamma, KElem c, std::size_t n);

  const KElem& alpha() const { return alpha_; }
  const KElem& gamma() const { return gamma_; }
  const KElem& c() const { return c_; }
  std::size_t n() const { return n_; }

  /// sqrt(2) gamma / c.
  KElem top_right() const { return KElem::sqrt2() * gamma_ / c_; }
  /// Determinant of the 2x2 corner block, alpha^2 - top_right * gamma.
  KElem block_determinant() const { return alpha_ * alpha_ - top_right() * gamma_; }
  /// The conic parameter t = gamma / (alpha - 1); throws std::domain_error at alpha = 1.
  KElem parameter() const;

  QuadForm form() const { return QuadForm::with_first(c_, n_); }
  KMatrix matrix() const;
  Isometry isometry() const { return Isometry(lift(matrix()), form()); }

 private:
  KElem alpha_;
  KElem gamma_;
  KElem c_;
  std::size_t n_;
};

/// Conic point through (alpha, gamma) = (1, 0) with slope parameter t:
/// alpha = (c + sqrt(2) t^2) / (sqrt(2) t^2 - c), gamma = 2 c t / (sqrt(2) t^2 - c).
/// Throws std::domain_error when sqrt(2) t^2 = c (asymptotic direction) or
/// sqrt(2) t^2 < c (alpha < 0, outside the identity component).
ABlockElement param_block(const KElem& c, const KElem& t, std::size_t n = 2);

/// The eigenvalue lambda > 1, the + root of x^2 - 2 alpha x + 1. Throws
/// std::domain_error unless alpha > 1, and std::logic_error if the block
/// determinant is not exactly 1.
QuadAlgNum leading_eigenvalue(const ABlockElement& g, mpfr_prec_t precision = 128);

/// Enclosure of log(lambda), checked to overlap acosh(alpha).
RealInterval translation_length(const ABlockElement& g, mpfr_prec_t precision = 128);

/// Double-precision translation length of param_block(c, t), for scanning.
double approximate_length(const KElem& c, const KElem& t);

class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& what, double best_length, KElem best_t)
      : std::runtime_error(what), best_length_(best_length), best_t_(std::move(best_t)) {}
  double best_length() const { return best_length_; }
  const KElem& best_t() const { return best_t_; }

 private:
  double best_length_;
  KElem best_t_;
};

struct SearchResult {
  ABlockElement element;
  KElem t;
  RealInterval length;
};

/**
 * First parametrized block with certified translation length below target.
 * Integers t are scanned upward from the smallest admissible one up to
 * height_bound; if none succeeds, elements p + (q/2) sqrt(2) with q != 0 are
 * tried in order of height, then value. Throws SearchExhausted carrying the
 * shortest length seen.
 */
SearchResult find_small_element(const KElem& c, double target, unsigned long height_bound, std::size_t n = 2,
                                mpfr_prec_t precision = 128);

enum class Similarity { obstructed, inconclusive };

/// Discriminant test: forms of even rank n + 1 that are similar over k have
/// discriminants in the same square class. Throws std::invalid_argument on a
/// dimension mismatch.
Similarity similarity_discriminant_obstruction(const QuadForm& f, const QuadForm& g);

/// Product of all diagonal entries.
KElem discriminant(const QuadForm& f);

}  // namespace hybrid
