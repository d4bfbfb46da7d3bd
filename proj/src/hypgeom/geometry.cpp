#include "hybrid/hypgeom/geometry.hpp"

#include <stdexcept>

namespace hybrid {
namespace {

RealInterval quarter_root_half(mpfr_prec_t precision) {
  // 2^(-1/4)
  return RealInterval::point(Rational(1), precision) / root4(RealInterval::point(Rational(2), precision));
}

bool parallel(const std::vector<TowerElem>& u, const std::vector<TowerElem>& w) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] * w[j] != u[j] * w[i]) return false;
    }
  }
  return true;
}

}  // namespace

RealInterval bilinear(const QuadForm& form, const RealVector& x, const RealVector& y) {
  if (x.size() != form.size() || y.size() != form.size()) {
    throw std::invalid_argument("vector length does not match the form");
  }
  const mpfr_prec_t precision = x.front().precision();
  RealInterval acc = RealInterval::point(Rational(0), precision);
  for (std::size_t i = 0; i < form.size(); ++i) acc = acc + embed(form.coefficient(i), precision) * x[i] * y[i];
  return acc;
}

HPoint::HPoint(RealVector coords, QuadForm form) : coords_(std::move(coords)), form_(std::move(form)) {
  if (coords_.size() != form_.size()) throw std::invalid_argument("point has the wrong number of coordinates");
  if (!bilinear(form_, coords_, coords_).contains(-1.0)) throw std::domain_error("point is not on {f = -1}");
  if (!coords_.back().strictly_positive()) throw std::domain_error("point is not on the upper sheet");
}

HPoint HPoint::basepoint(const QuadForm& form, mpfr_prec_t precision) {
  RealVector x(form.size(), RealInterval::point(Rational(0), precision));
  x.back() = quarter_root_half(precision);
  return HPoint(std::move(x), form);
}

RealInterval dist_points(const HPoint& x, const HPoint& y) {
  if (x.form() != y.form()) throw std::invalid_argument("points lie on different forms");
  return acosh(-bilinear(x.form(), x.coords(), y.coords()));
}

HPoint axis_point(const KElem& c, const RealInterval& s, std::size_t n) {
  const mpfr_prec_t precision = s.precision();
  RealVector x(n + 1, RealInterval::point(Rational(0), precision));
  x.front() = sinh(s) / sqrt(embed(c, precision));
  x.back() = cosh(s) * quarter_root_half(precision);
  return HPoint(std::move(x), QuadForm::with_first(c, n));
}

HPoint axis_point(const KElem& c, double s, std::size_t n, mpfr_prec_t precision) {
  return axis_point(c, RealInterval::point(s, precision), n);
}

HPoint apply(const Isometry& m, const HPoint& x) {
  if (m.form() != x.form()) throw std::invalid_argument("isometry and point use different forms");
  const mpfr_prec_t precision = x.precision();
  RealVector y;
  for (std::size_t i = 0; i < m.size(); ++i) {
    RealInterval acc = RealInterval::point(Rational(0), precision);
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!m.matrix()(i, j).is_zero()) acc = acc + embed(m.matrix()(i, j), precision) * x.coords()[j];
    }
    y.push_back(std::move(acc));
  }
  return HPoint(std::move(y), x.form());
}

GeodesicHyperplane::GeodesicHyperplane(std::vector<TowerElem> normal, QuadForm form)
    : normal_(std::move(normal)), form_(std::move(form)) {
  if (normal_.size() != form_.size()) throw std::invalid_argument("normal has the wrong number of coordinates");
  if (sign(form_.evaluate(normal_)) <= 0) throw std::invalid_argument("hyperplane normal is not spacelike");
}

GeodesicHyperplane GeodesicHyperplane::coordinate(const QuadForm& form, std::size_t i) {
  if (i >= form.n()) throw std::invalid_argument("coordinate hyperplanes use spatial indices");
  std::vector<TowerElem> u(form.size(), TowerElem(0));
  u[i] = TowerElem(1);
  return GeodesicHyperplane(std::move(u), form);
}

bool GeodesicHyperplane::contains(const HPoint& x) const {
  if (x.form() != form_) return false;
  const mpfr_prec_t precision = x.precision();
  RealVector u;
  for (const auto& e : normal_) u.push_back(embed(e, precision));
  return bilinear(form_, u, x.coords()).contains(0.0);
}

GeodesicHyperplane GeodesicHyperplane::image(const Isometry& m) const {
  if (m.form() != form_) throw std::invalid_argument("isometry and hyperplane use different forms");
  return GeodesicHyperplane(m.matrix().apply(normal_), form_);
}

const char* to_string(HyperplaneRelation::Kind kind) {
  switch (kind) {
    case HyperplaneRelation::Kind::disjoint: return "disjoint";
    case HyperplaneRelation::Kind::asymptotic: return "asymptotic";
    case HyperplaneRelation::Kind::intersecting: return "intersecting";
  }
  return "?";
}

HyperplaneRelation dist_hyperplanes(const GeodesicHyperplane& h, const GeodesicHyperplane& h2,
                                    mpfr_prec_t precision) {
  if (h.form() != h2.form()) throw std::invalid_argument("hyperplanes use different forms");
  const QuadForm& f = h.form();
  const TowerElem b = f.pairing(h.normal(), h2.normal());
  const TowerElem ratio = b * b / (f.evaluate(h.normal()) * f.evaluate(h2.normal()));
  const RealInterval zero = RealInterval::point(Rational(0), precision);
  if (parallel(h.normal(), h2.normal())) return {HyperplaneRelation::Kind::intersecting, zero, ratio};
  const int s = sign(ratio - TowerElem(1));
  if (s == 0) return {HyperplaneRelation::Kind::asymptotic, zero, ratio};
  const RealInterval cosine = sqrt(embed(ratio, precision));
  if (s > 0) return {HyperplaneRelation::Kind::disjoint, acosh(cosine), ratio};
  return {HyperplaneRelation::Kind::intersecting, acos(cosine), ratio};
}

Orthogeodesic orthogeodesic(const GeodesicHyperplane& h, const GeodesicHyperplane& gh, const ABlockElement& g,
                            mpfr_prec_t precision) {
  const Isometry m = g.isometry();
  const GeodesicHyperplane expected = GeodesicHyperplane::coordinate(m.form(), 0);
  if (h.form() != m.form() || !parallel(h.normal(), expected.normal()) ||
      !parallel(gh.normal(), expected.image(m).normal())) {
    throw std::invalid_argument("orthogeodesic expects H = {x_1 = 0} and its image under g");
  }
  const HyperplaneRelation rel = dist_hyperplanes(h, gh, precision);
  if (rel.kind != HyperplaneRelation::Kind::disjoint) {
    throw std::domain_error(std::string("hyperplanes are ") + to_string(rel.kind) + ", not disjoint");
  }
  RealInterval length = acosh(embed(g.alpha(), precision));
  RealInterval half = length / RealInterval::point(Rational(2), precision);
  return {length, axis_point(g.c(), RealInterval::point(Rational(0), precision), g.n()),
          axis_point(g.c(), half, g.n())};
}

double systole_witness(double l1, double l2) {
  if (!(l1 > 0) || !(l2 > 0)) throw std::invalid_argument("lengths must be positive");
  return 2 * (l1 + l2);
}

RealInterval systole_witness(const RealInterval& l1, const RealInterval& l2) {
  if (!l1.strictly_positive() || !l2.strictly_positive()) throw std::invalid_argument("lengths must be positive");
  return RealInterval::point(Rational(2), l1.precision()) * (l1 + l2);
}

}  // namespace hybrid
