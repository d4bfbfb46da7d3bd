#include "hybrid/polyalg/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "hybrid/polyalg/roots.hpp"

namespace hybrid {
namespace {

constexpr mpfr_prec_t kStartPrecision = 128;
constexpr mpfr_prec_t kMaxPrecision = 4096;

struct Bounds {
  double lo = 1;
  double hi = 1;
};

// Measure enclosure for a monic squarefree factor.
Bounds monic_measure(const QPoly& f, mpfr_prec_t precision) {
  Bounds b;
  if (f.degree() < 1) return b;
  for (const RootDisc& disc : isolate_roots(f, precision)) {
    BigFloat m = modulus(disc.center);
    BigFloat up(precision), down(precision);
    mpfr_add(up.get(), m.get(), disc.radius.get(), MPFR_RNDU);
    mpfr_sub(down.get(), m.get(), disc.radius.get(), MPFR_RNDD);
    b.lo *= std::max(1.0, down.to_double(MPFR_RNDD));
    b.hi *= std::max(1.0, up.to_double(MPFR_RNDU));
  }
  return b;
}

// Double-precision estimate; NaN when Aberth misbehaves.
double approximate_measure(const ZPoly& p) {
  std::vector<double> c;
  for (const auto& z : p.coefficients()) c.push_back(z.get_d());
  double m = std::fabs(c.back());
  for (const auto& [re, im] : approximate_roots(c)) m *= std::max(1.0, std::hypot(re, im));
  return m;
}

ZPoly graeffe(const ZPoly& f) {
  // f(x) = E(x^2) + x O(x^2);  g(y) = (-1)^d (E(y)^2 - y O(y)^2).
  std::vector<Integer> even, odd;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) (i % 2 == 0 ? even : odd).push_back(c[i]);
  ZPoly e(even), o(odd);
  ZPoly g = e * e - ZPoly{Integer(0), Integer(1)} * o * o;
  if (f.degree() % 2 != 0) g = -g;
  return g;
}

bool lex_less(const ZPoly& x, const ZPoly& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  return std::lexicographical_compare(x.coefficients().begin(), x.coefficients().end(),
                                      y.coefficients().begin(), y.coefficients().end());
}

}  // namespace

double mahler_measure(const ZPoly& p, double tol) {
  if (p.is_zero()) throw std::invalid_argument("Mahler measure of the zero polynomial");
  if (!(tol > 0)) throw std::invalid_argument("Mahler measure tolerance must be positive");
  const double lead = std::fabs(p.leading().get_d());
  if (p.degree() == 0) return lead;
  const auto factors = squarefree_decomposition(to_qpoly(p));
  for (mpfr_prec_t precision = kStartPrecision; precision <= kMaxPrecision; precision *= 2) {
    Bounds total{lead, lead};
    try {
      for (const auto& [factor, multiplicity] : factors) {
        Bounds b = monic_measure(factor, precision);
        total.lo *= std::pow(b.lo, multiplicity);
        total.hi *= std::pow(b.hi, multiplicity);
      }
    } catch (const std::runtime_error&) {
      continue;
    }
    // Double rounding in the products is a few ulps per factor.
    const double slop = 8 * p.degree() * 1e-16 * total.hi;
    if (total.hi - total.lo + slop < tol) return 0.5 * (total.lo + total.hi);
  }
  throw std::runtime_error("Mahler measure: root refinement did not converge");
}

bool is_kronecker(const ZPoly& monic) {
  if (monic.degree() < 1 || monic.leading() != 1) {
    throw std::invalid_argument("Kronecker test needs a monic polynomial of degree >= 1");
  }
  const auto d = static_cast<unsigned long>(monic.degree());
  std::set<std::vector<Integer>> seen;
  ZPoly g = monic;
  while (true) {
    // Roots in the closed unit disc bound each elementary symmetric function by C(d, i).
    for (unsigned long i = 0; i <= d; ++i) {
      if (abs(g[d - i]) > binomial(d, i)) return false;
    }
    if (!seen.insert(g.coefficients()).second) return true;
    g = graeffe(g);
  }
}

std::vector<ZPoly> enumerate_bounded(int max_degree, double bound, double tol) {
  if (max_degree < 1) throw std::invalid_argument("enumerate_bounded: degree bound must be >= 1");
  if (!(bound >= 1)) throw std::invalid_argument("enumerate_bounded: measure bound must be >= 1");
  std::vector<ZPoly> out;
  for (int d = 1; d <= max_degree; ++d) {
    // limits[j] bounds |a_j|; a_j = a_(d-i) with i = d - j.
    std::vector<long> limits(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      const double b = binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(d - j)).get_d() * (bound + tol);
      limits[static_cast<std::size_t>(j)] = static_cast<long>(std::floor(b));
    }
    std::vector<long> a(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) a[static_cast<std::size_t>(j)] = -limits[static_cast<std::size_t>(j)];
    while (true) {
      std::vector<Integer> coeffs(a.begin(), a.end());
      coeffs.emplace_back(1);
      ZPoly p(std::move(coeffs));
      const double rough = approximate_measure(p);
      if (!(rough > (bound + tol) * (1 + 1e-3))) {
        if (mahler_measure(p, tol / 4) <= bound + tol) out.push_back(std::move(p));
      }
      // Odometer over a_0 (fastest) .. a_(d-1).
      int j = 0;
      while (j < d && a[static_cast<std::size_t>(j)] == limits[static_cast<std::size_t>(j)]) {
        a[static_cast<std::size_t>(j)] = -limits[static_cast<std::size_t>(j)];
        ++j;
      }
      if (j == d) break;
      ++a[static_cast<std::size_t>(j)];
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

MahlerMinimum min_mahler_above_one(int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("min_mahler_above_one: degree bound must be >= 1");
  // x - 2 has measure 2 in every degree, and the minimum is non-increasing in
  // the degree bound, so each level only needs the box under the previous minimum.
  double bound = 2.0;
  MahlerMinimum best;
  for (int d = 1; d <= max_degree; ++d) {
    MahlerMinimum level;
    bool found = false;
    for (const ZPoly& p : enumerate_bounded(d, bound)) {
      const double m = mahler_measure(p, 1e-12);
      const bool numerically_one = m < 1 + kMeasureOneGap;
      if (numerically_one != is_kronecker(p)) {
        throw std::logic_error("Mahler measure disagrees with the Kronecker criterion for " + to_string(p));
      }
      if (numerically_one) continue;
      const bool better = !found || m < level.value - 1e-9 ||
                          (std::fabs(m - level.value) <= 1e-9 && lex_less(p, level.witness));
      if (better) {
        level.value = m;
        level.witness = p;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no polynomial above measure one found");
    best = level;
    bound = level.value;
  }
  best.epsilon = std::log(best.value);
  return best;
}

}  // namespace hybrid
