#include "hybrid/polyalg/algnum.hpp"

#include <algorithm>
#include <cmath>

#include "hybrid/polyalg/resultant.hpp"
#include "hybrid/polyalg/roots.hpp"

namespace hybrid {
namespace {

constexpr int kMaxEscalations = 4;

RealInterval root_enclosure(const KElem& trace, const KElem& norm, Branch branch, mpfr_prec_t precision) {
  const KElem disc = trace * trace - KElem(4) * norm;
  RealInterval t = embed(trace, precision);
  RealInterval half = RealInterval::point(Rational(1, 2), precision);
  if (disc.is_zero()) return t * half;
  RealInterval root = sqrt(embed(disc, precision));
  return (branch == Branch::plus ? t + root : t - root) * half;
}

// Roots closed under complex conjugation: a real root alone, or a conjugate pair.
struct Orbit {
  std::vector<std::size_t> members;
};

}  // namespace

QuadAlgNum::QuadAlgNum(KElem trace, KElem norm, Branch branch, mpfr_prec_t precision)
    : trace_(std::move(trace)), norm_(std::move(norm)), branch_(branch), numeric_(precision) {
  if (sign(discriminant()) < 0) {
    throw std::invalid_argument("x^2 - (" + trace_.to_string() + ")x + (" + norm_.to_string() +
                                ") has no real roots");
  }
  numeric_ = root_enclosure(trace_, norm_, branch_, precision);
}

QuadAlgNum QuadAlgNum::from_k(const KElem& r, mpfr_prec_t precision) {
  return {KElem(2) * r, r * r, Branch::plus, precision};
}

QuadAlgNum quadratic_root_near(const KElem& trace, const KElem& norm, const RealInterval& near) {
  QuadAlgNum plus(trace, norm, Branch::plus, near.precision());
  if (plus.discriminant().is_zero()) return plus;
  QuadAlgNum minus(trace, norm, Branch::minus, near.precision());
  const bool p = plus.numeric().overlaps(near);
  const bool m = minus.numeric().overlaps(near);
  if (p == m) throw CoarseInterval("enclosure does not single out a root of the quadratic");
  return p ? plus : minus;
}

QPoly eliminant(const QuadAlgNum& lambda) {
  // x^2 - (t0 + t1 y) x + (n0 + n1 y) = A(x) + B(x) y, then eliminate y with y^2 - 2.
  const KElem& t = lambda.trace();
  const KElem& n = lambda.norm();
  QPoly a{n.rational_part(), Rational(-t.rational_part()), Rational(1)};
  QPoly b{n.sqrt2_part(), Rational(-t.sqrt2_part())};
  BivariatePoly p{a, b};
  BivariatePoly q{QPoly::constant(Rational(-2)), QPoly(), QPoly::constant(Rational(1))};
  return resultant_in_y(p, q);
}

QPoly select_minimal_factor(const QPoly& f, const RealInterval& enclosure, mpfr_prec_t precision) {
  const QPoly g = squarefree_part(f);
  if (g.degree() < 1) throw std::invalid_argument("select_minimal_factor: constant polynomial");
  auto verify = [&](const QPoly& factor) {
    if (!evaluate(factor, enclosure).contains_zero()) {
      throw CoarseInterval("selected factor does not vanish on the enclosure");
    }
    QPoly cofactor = divmod(g, factor).quotient;
    if (cofactor.degree() >= 1 && evaluate(cofactor, enclosure).contains_zero()) {
      throw CoarseInterval("enclosure too coarse to separate factors");
    }
    return factor;
  };
  if (g.degree() == 1) return verify(g);

  std::vector<RootDisc> discs;
  try {
    discs = isolate_roots(g, precision);
  } catch (const std::runtime_error& e) {
    throw CoarseInterval(std::string("root isolation failed: ") + e.what());
  }
  const std::size_t d = discs.size();

  // Locate the disc that meets the (real) enclosure.
  std::vector<bool> is_real(d);
  std::size_t target = d;
  int hits = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const RootDisc& disc = discs[i];
    is_real[i] = mpfr_cmpabs(disc.center.im.get(), disc.radius.get()) <= 0;
    if (!is_real[i]) continue;
    BigFloat lo(disc.center.re), hi(disc.center.re);
    mpfr_sub(lo.get(), lo.get(), disc.radius.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), disc.radius.get(), MPFR_RNDU);
    if (RealInterval::from_bounds(lo, hi).overlaps(enclosure)) {
      target = i;
      ++hits;
    }
  }
  if (hits != 1) throw CoarseInterval("enclosure meets " + std::to_string(hits) + " root discs");

  // Conjugation orbits.
  std::vector<Orbit> orbits;
  std::vector<bool> used(d, false);
  std::size_t target_orbit = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (used[i]) continue;
    Orbit orbit{{i}};
    used[i] = true;
    if (!is_real[i]) {
      double best = INFINITY;
      std::size_t partner = d;
      for (std::size_t j = 0; j < d; ++j) {
        if (used[j]) continue;
        const double dr = discs[i].center.re.to_double() - discs[j].center.re.to_double();
        const double di = discs[i].center.im.to_double() + discs[j].center.im.to_double();
        const double dist = std::hypot(dr, di);
        if (dist < best) {
          best = dist;
          partner = j;
        }
      }
      if (partner == d) throw CoarseInterval("unpaired non-real root");
      used[partner] = true;
      orbit.members.push_back(partner);
    }
    if (std::find(orbit.members.begin(), orbit.members.end(), target) != orbit.members.end()) {
      target_orbit = orbits.size();
    }
    orbits.push_back(std::move(orbit));
  }

  if (orbits.size() > 24) throw std::invalid_argument("select_minimal_factor: degree too large");
  const ZPoly primitive = primitive_part(g);
  const Integer scale = primitive.leading();
  const double scale_d = scale.get_d();
  std::vector<std::size_t> others;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (o != target_orbit) others.push_back(o);
  }
  struct Candidate {
    std::size_t degree;
    unsigned long mask;
  };
  std::vector<Candidate> candidates;
  for (unsigned long mask = 0; mask < (1UL << others.size()); ++mask) {
    std::size_t deg = orbits[target_orbit].members.size();
    for (std::size_t b = 0; b < others.size(); ++b) {
      if (mask & (1UL << b)) deg += orbits[others[b]].members.size();
    }
    candidates.push_back({deg, mask});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& x, const Candidate& y) { return x.degree < y.degree; });

  const double tolerance = std::ldexp(1.0, -std::min<int>(static_cast<int>(precision) / 4, 40));
  for (const Candidate& cand : candidates) {
    std::vector<std::size_t> roots = orbits[target_orbit].members;
    for (std::size_t b = 0; b < others.size(); ++b) {
      if (cand.mask & (1UL << b)) {
        const auto& m = orbits[others[b]].members;
        roots.insert(roots.end(), m.begin(), m.end());
      }
    }
    // Cheap trace filter: scale * (sum of roots) must be an integer.
    double trace = 0;
    for (std::size_t r : roots) trace += discs[r].center.re.to_double();
    const double st = scale_d * trace;
    if (std::fabs(st - std::nearbyint(st)) > 1e-6 * std::max(1.0, std::fabs(st))) continue;

    std::vector<BigComplex> coeffs{BigComplex(1.0, 0.0, precision)};
    for (std::size_t r : roots) {
      std::vector<BigComplex> next(coeffs.size() + 1, BigComplex(precision));
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i + 1] = next[i + 1] + coeffs[i];
        next[i] = next[i] - coeffs[i] * discs[r].center;
      }
      coeffs = std::move(next);
    }
    std::vector<Rational> exact;
    bool ok = true;
    for (auto& c : coeffs) {
      BigFloat v(precision);
      mpfr_mul_z(v.get(), c.re.get(), scale.get_mpz_t(), MPFR_RNDN);
      BigFloat rounded(precision);
      mpfr_rint(rounded.get(), v.get(), MPFR_RNDN);
      BigFloat err(precision);
      mpfr_sub(err.get(), v.get(), rounded.get(), MPFR_RNDN);
      const double mag = std::max(1.0, std::fabs(v.to_double()));
      if (std::fabs(err.to_double()) > tolerance * mag ||
          std::fabs(c.im.to_double()) * std::fabs(scale_d) > tolerance * mag) {
        ok = false;
        break;
      }
      Integer z;
      mpfr_get_z(z.get_mpz_t(), rounded.get(), MPFR_RNDN);
      exact.emplace_back(z, scale);
    }
    if (!ok) continue;
    QPoly factor(std::move(exact));
    if (factor.degree() != static_cast<int>(roots.size())) continue;
    if (!divmod(g, factor).remainder.is_zero()) continue;
    return verify(monic(factor));
  }
  throw CoarseInterval("no rational factor found at this precision");
}

AlgebraicReal minpoly_over_Q(const QuadAlgNum& lambda) {
  const QPoly elim = eliminant(lambda);
  mpfr_prec_t precision = std::max<mpfr_prec_t>(lambda.numeric().precision(), 128);
  for (int attempt = 0; attempt <= kMaxEscalations; ++attempt, precision *= 2) {
    QuadAlgNum refined = lambda.refined(precision);
    try {
      QPoly m = select_minimal_factor(elim, refined.numeric(), 2 * precision);
      return {m, refined.numeric()};
    } catch (const CoarseInterval&) {
      if (attempt == kMaxEscalations) throw;
    }
  }
  throw std::runtime_error("unreachable");
}

AlgebraicReal product(const QuadAlgNum& lambda, const QuadAlgNum& mu) {
  const AlgebraicReal a = minpoly_over_Q(lambda);
  const AlgebraicReal b = minpoly_over_Q(mu);
  mpfr_prec_t precision = std::max<mpfr_prec_t>(
      std::max(lambda.numeric().precision(), mu.numeric().precision()), 128);
  if (a.minpoly.degree() == 1 && sgn(a.minpoly[0]) == 0) {
    return {QPoly::x(), a.enclosure * b.enclosure};
  }
  // z^d p(x/z) = sum_i p_i x^i z^(d-i): coefficient of z^j is p_(d-j) x^(d-j).
  const int d = a.minpoly.degree();
  BivariatePoly homogenized(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    std::vector<Rational> mono(static_cast<std::size_t>(d - j + 1), Rational(0));
    mono.back() = a.minpoly[static_cast<std::size_t>(d - j)];
    homogenized[static_cast<std::size_t>(j)] = QPoly(std::move(mono));
  }
  BivariatePoly q;
  for (const auto& c : b.minpoly.coefficients()) q.push_back(QPoly::constant(c));
  const QPoly composed = resultant_in_y(homogenized, q);

  for (int attempt = 0; attempt <= kMaxEscalations; ++attempt, precision *= 2) {
    RealInterval enclosure = lambda.refined(precision).numeric() * mu.refined(precision).numeric();
    try {
      return {select_minimal_factor(composed, enclosure, 2 * precision), enclosure};
    } catch (const CoarseInterval&) {
      if (attempt == kMaxEscalations) {
        throw std::runtime_error("product minimal polynomial: precision escalation failed");
      }
    }
  }
  throw std::runtime_error("unreachable");
}

QPoly charpoly_over_Q(const TowerElem& x) {
  using KPoly = Polynomial<KElem>;
  const KElem& u = x.k_part();
  KPoly q;
  if (x.field()) {
    // (X - u)^2 - a v^2, the charpoly of x over k.
    const KElem& v = x.sqrt_a_part();
    q = KPoly{u * u - KElem(x.field()->a()) * v * v, KElem(-2) * u, KElem(1)};
  } else {
    q = KPoly{-u, KElem(1)};
  }
  std::vector<KElem> conj;
  for (const auto& c : q.coefficients()) conj.push_back(galois_conjugate(c));
  const KPoly full = q * KPoly(conj);
  std::vector<Rational> out;
  for (const auto& c : full.coefficients()) {
    if (!c.is_rational()) throw std::logic_error("norm polynomial left a sqrt(2) coordinate");
    out.push_back(c.rational_part());
  }
  return QPoly(std::move(out));
}

QPoly minpoly_over_Q(const TowerElem& x) { return squarefree_part(charpoly_over_Q(x)); }

bool is_algebraic_integer(const QPoly& minimal) {
  return !minimal.is_zero() && minimal.leading() == 1 && has_integer_coefficients(minimal);
}

bool is_algebraic_integer(const QuadAlgNum& lambda) { return is_algebraic_integer(minpoly_over_Q(lambda).minpoly); }

bool is_algebraic_integer(const TowerElem& x) { return is_algebraic_integer(minpoly_over_Q(x)); }

}  // namespace hybrid
