#pragma once

#include <vector>

#include "hybrid/exactfield/interval.hpp"
#include "hybrid/lorentz/block.hpp"
#include "hybrid/lorentz/form.hpp"

namespace hybrid {

using RealVector = std::vector<RealInterval>;

/// B(x, y) = sum F_i x_i y_i, the polarization of the form.
template <class T>
T bilinear(const QuadForm& form, const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != form.size() || y.size() != form.size()) {
    throw std::invalid_argument("vector length does not match the form");
  }
  return form.pairing(x, y);
}
RealInterval bilinear(const QuadForm& form, const RealVector& x, const RealVector& y);

/// Point of the upper sheet {f = -1, x_(n+1) > 0}; coordinates are intervals.
class HPoint {
 public:
  /// Throws std::domain_error unless f(x) may equal -1 and x_(n+1) > 0.
  HPoint(RealVector coords, QuadForm form);

  /// (0, ..., 0, 2^(-1/4)).
  static HPoint basepoint(const QuadForm& form, mpfr_prec_t precision = 128);

  const RealVector& coords() const { return coords_; }
  const QuadForm& form() const { return form_; }
  mpfr_prec_t precision() const { return coords_.front().precision(); }

 private:
  RealVector coords_;
  QuadForm form_;
};

/// acosh(-B(x, y)). Throws std::invalid_argument for points on different forms.
RealInterval dist_points(const HPoint& x, const HPoint& y);

/// Point at signed distance s from the basepoint along the x_1 axis:
/// (sinh(s)/sqrt(c), 0, ..., 0, cosh(s) 2^(-1/4)) on diag(c, 1, ..., 1, -rt2).
HPoint axis_point(const KElem& c, const RealInterval& s, std::size_t n);
HPoint axis_point(const KElem& c, double s, std::size_t n, mpfr_prec_t precision = 128);

/// Image of a point under an exact isometry of its form.
HPoint apply(const Isometry& m, const HPoint& x);

/// Hyperplane u^perp for an exact spacelike normal u (f(u) > 0).
class GeodesicHyperplane {
 public:
  /// Throws std::invalid_argument unless f(u) > 0.
  GeodesicHyperplane(std::vector<TowerElem> normal, QuadForm form);

  /// {x_i = 0}, normal e_i (spatial i only).
  static GeodesicHyperplane coordinate(const QuadForm& form, std::size_t i = 0);

  const std::vector<TowerElem>& normal() const { return normal_; }
  const QuadForm& form() const { return form_; }
  bool contains(const HPoint& x) const;

  GeodesicHyperplane image(const Isometry& m) const;

 private:
  std::vector<TowerElem> normal_;
  QuadForm form_;
};

struct HyperplaneRelation {
  enum class Kind { disjoint, asymptotic, intersecting };
  Kind kind;
  /// Distance when disjoint, angle when intersecting, zero when asymptotic.
  RealInterval value;
  /// Exact B(u, u')^2 / (f(u) f(u')), compared with 1 for the trichotomy.
  TowerElem cosh_squared;
};

const char* to_string(HyperplaneRelation::Kind kind);

/// Exact trichotomy by comparing B(u, u')^2 with f(u) f(u'); identical
/// hyperplanes report intersecting at angle 0.
HyperplaneRelation dist_hyperplanes(const GeodesicHyperplane& h, const GeodesicHyperplane& h2,
                                    mpfr_prec_t precision = 128);

struct Orthogeodesic {
  RealInterval length;
  HPoint foot;
  HPoint midpoint;
};

/// Common perpendicular of H = {x_1 = 0} and gH for a block element g. Throws
/// std::domain_error unless the two hyperplanes are disjoint, and
/// std::invalid_argument if h, gh are not H and gH for this g.
Orthogeodesic orthogeodesic(const GeodesicHyperplane& h, const GeodesicHyperplane& gh, const ABlockElement& g,
                            mpfr_prec_t precision = 128);

/// 2 (l1 + l2), the length of the doubled orthogeodesic. Throws
/// std::invalid_argument unless both lengths are positive.
double systole_witness(double l1, double l2);
RealInterval systole_witness(const RealInterval& l1, const RealInterval& l2);

}  // namespace hybrid
