#include "hybrid/lorentz/block.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace hybrid {
namespace {

// Height of p + (q/2) sqrt(2) without building the element.
long half_height(long p, long q) {
  long h = std::labs(p);
  if (q != 0) h = std::max(h, q % 2 == 0 ? std::labs(q / 2) : std::max(std::labs(q), 2L));
  return h;
}

bool admissible(const KElem& c, const KElem& t) {
  return sign(KElem::sqrt2() * t * t - c) > 0;
}

}  // namespace

ABlockElement::ABlockElement(KElem alpha, KElem gamma, KElem c, std::size_t n)
    : alpha_(std::move(alpha)), gamma_(std::move(gamma)), c_(std::move(c)), n_(n) {
  if (n_ < 1) throw std::invalid_argument("block element needs n >= 1");
  if (sign(c_) <= 0) throw std::invalid_argument("block element needs c > 0");
  if (c_ * alpha_ * alpha_ - KElem::sqrt2() * gamma_ * gamma_ != c_) {
    throw std::invalid_argument("(alpha, gamma) = (" + alpha_.to_string() + ", " + gamma_.to_string() +
                                ") is not on the conic c alpha^2 - sqrt2 gamma^2 = c");
  }
}

KElem ABlockElement::parameter() const {
  if (alpha_ == KElem(1)) throw std::domain_error("the identity has no conic parameter");
  return gamma_ / (alpha_ - KElem(1));
}

KMatrix ABlockElement::matrix() const {
  KMatrix m = KMatrix::identity(n_ + 1);
  m(0, 0) = alpha_;
  m(0, n_) = top_right();
  m(n_, 0) = gamma_;
  m(n_, n_) = alpha_;
  return m;
}

ABlockElement param_block(const KElem& c, const KElem& t, std::size_t n) {
  const KElem s = KElem::sqrt2() * t * t;
  const KElem d = s - c;
  const int sd = sign(d);
  if (sd == 0) throw std::domain_error("sqrt2 t^2 = c: t = " + t.to_string() + " is the asymptotic direction");
  if (sd < 0) {
    throw std::domain_error("sqrt2 t^2 < c for t = " + t.to_string() + ": alpha would be negative (wrong branch)");
  }
  return ABlockElement((c + s) / d, KElem(2) * c * t / d, c, n);
}

QuadAlgNum leading_eigenvalue(const ABlockElement& g, mpfr_prec_t precision) {
  if (sign(g.alpha() - KElem(1)) <= 0) {
    throw std::domain_error("alpha = " + g.alpha().to_string() + " is not > 1; the element is not loxodromic");
  }
  if (g.block_determinant() != KElem(1)) throw std::logic_error("block determinant is not 1");
  return QuadAlgNum(KElem(2) * g.alpha(), KElem(1), Branch::plus, precision);
}

RealInterval translation_length(const ABlockElement& g, mpfr_prec_t precision) {
  const RealInterval len = log(leading_eigenvalue(g, precision).numeric());
  if (!len.overlaps(acosh(embed(g.alpha(), precision)))) {
    throw std::logic_error("log(lambda) and acosh(alpha) enclosures are disjoint");
  }
  return len;
}

double approximate_length(const KElem& c, const KElem& t) {
  // alpha - 1 = 2c / (sqrt2 t^2 - c); acosh(1 + x) = log1p(x + sqrt(x (x + 2))).
  const double x = embed(KElem(2) * c / (KElem::sqrt2() * t * t - c), 64).midpoint();
  return std::log1p(x + std::sqrt(x * (x + 2)));
}

SearchResult find_small_element(const KElem& c, double target, unsigned long height_bound, std::size_t n,
                                mpfr_prec_t precision) {
  if (!(target > 0)) throw std::invalid_argument("target length must be positive");
  if (sign(c) <= 0) throw std::invalid_argument("c must be positive");
  double best = std::numeric_limits<double>::infinity();
  KElem best_t;
  auto attempt = [&](const KElem& t) -> std::optional<SearchResult> {
    const double rough = approximate_length(c, t);
    if (rough < best) {
      best = rough;
      best_t = t;
    }
    if (rough > target * (1 + 1e-9)) return std::nullopt;
    ABlockElement g = param_block(c, t, n);
    RealInterval len = translation_length(g, precision);
    if (!(len.upper() < target)) return std::nullopt;
    return SearchResult{std::move(g), t, std::move(len)};
  };

  // Integers: the length decreases in t, so the first success is the answer.
  unsigned long t0 = 1;
  while (t0 <= height_bound && !admissible(c, KElem(static_cast<long>(t0)))) ++t0;
  for (unsigned long t = t0; t <= height_bound; ++t) {
    if (auto r = attempt(KElem(static_cast<long>(t)))) return std::move(*r);
  }

  // p + (q/2) sqrt2 by height, then value.
  const long hb = static_cast<long>(std::min<unsigned long>(height_bound, 1UL << 20));
  for (long h = 1; h <= hb; ++h) {
    // Largest value of height h is h + h sqrt2; skip heights that cannot succeed.
    const KElem largest{Rational(h), Rational(h)};
    if (admissible(c, largest) && approximate_length(c, largest) > target * (1 + 1e-9)) {
      continue;
    }
    std::vector<KElem> candidates;
    for (long p = -h; p <= h; ++p) {
      for (long q = -2 * h; q <= 2 * h; ++q) {
        if (q == 0 || half_height(p, q) != h) continue;
        KElem t{Rational(p), Rational(q) / 2};
        if (sign(t) > 0 && admissible(c, t)) candidates.push_back(std::move(t));
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const KElem& x, const KElem& y) { return sign(x - y) < 0; });
    for (const KElem& t : candidates) {
      if (auto r = attempt(t)) return std::move(*r);
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", target);
  throw SearchExhausted("no parametrized element of length < " + std::string(buf) + " up to height " +
                            std::to_string(height_bound),
                        best, best_t);
}

KElem discriminant(const QuadForm& f) {
  KElem d(1);
  for (std::size_t i = 0; i < f.size(); ++i) d *= f.coefficient(i);
  return d;
}

Similarity similarity_discriminant_obstruction(const QuadForm& f, const QuadForm& g) {
  if (f.size() != g.size()) throw std::invalid_argument("forms have different dimensions");
  // g ~ s f forces disc(g) = s^(n+1) disc(f), a square multiple when n + 1 is even.
  if (f.size() % 2 != 0) return Similarity::inconclusive;
  return is_square_in_k(discriminant(f) / discriminant(g)).is_square ? Similarity::inconclusive
                                                                      : Similarity::obstructed;
}

}  // namespace hybrid
