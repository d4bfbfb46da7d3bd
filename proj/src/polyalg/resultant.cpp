#include "hybrid/polyalg/resultant.hpp"

#include <stdexcept>

namespace hybrid {
namespace {

Rational power(const Rational& base, long e) {
  Rational r = 1;
  if (e < 0) {
    if (sgn(base) == 0) throw std::domain_error("negative power of zero");
    return power(1 / base, -e);
  }
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b
QPoly pseudo_remainder(const QPoly& a, const QPoly& b) {
  const long delta = a.degree() - b.degree();
  return divmod(power(b.leading(), delta + 1) * a, b).remainder;
}

}  // namespace

Rational resultant(const QPoly& p, const QPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  QPoly a = p;
  QPoly b = q;
  Rational s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  if (b.degree() == 0) return s * power(b.leading(), a.degree());
  Rational g = 1;
  Rational h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    QPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = Rational(1 / (g * power(h, delta))) * r;
    g = a.leading();
    h = power(h, 1 - delta) * power(g, delta);
    if (b.degree() == 0) break;
  }
  h = power(h, 1 - a.degree()) * power(b.leading(), a.degree());
  return s * h;
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  QPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * QPoly{Rational(-xs[i]), Rational(1)} + QPoly::constant(dd[i]);
  }
  return result;
}

QPoly resultant_in_y(const BivariatePoly& p, const BivariatePoly& q) {
  auto trimmed_degree = [](const BivariatePoly& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[static_cast<std::size_t>(d)].is_zero()) --d;
    return d;
  };
  const int dp = trimmed_degree(p);
  const int dq = trimmed_degree(q);
  if (dp < 0 || dq < 0) throw std::invalid_argument("resultant of a zero polynomial");
  auto max_x_degree = [](const BivariatePoly& f) {
    int d = 0;
    for (const auto& c : f) d = std::max(d, c.degree());
    return d;
  };
  const int bound = dq * max_x_degree(p) + dp * max_x_degree(q);
  const QPoly& lead_p = p[static_cast<std::size_t>(dp)];
  const QPoly& lead_q = q[static_cast<std::size_t>(dq)];

  auto specialize = [](const BivariatePoly& f, int deg, const Rational& x) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(f[static_cast<std::size_t>(i)].evaluate(x));
    return QPoly(std::move(c));
  };

  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (long x = 0; static_cast<int>(xs.size()) <= bound; ++x) {
    // Alternate 0, 1, -1, 2, -2, ... to keep the sample points small.
    const Rational pt(x % 2 == 0 ? -(x / 2) : (x + 1) / 2);
    if (sgn(lead_p.evaluate(pt)) == 0 || sgn(lead_q.evaluate(pt)) == 0) continue;
    xs.push_back(pt);
    ys.push_back(resultant(specialize(p, dp, pt), specialize(q, dq, pt)));
  }
  return interpolate(xs, ys);
}

}  // namespace hybrid
