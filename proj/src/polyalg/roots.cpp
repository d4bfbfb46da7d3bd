#include "hybrid/polyalg/roots.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace hybrid {

BigComplex operator+(const BigComplex& x, const BigComplex& y) {
  BigComplex r(std::max(x.precision(), y.precision()));
  mpfr_add(r.re.get(), x.re.get(), y.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), x.im.get(), y.im.get(), MPFR_RNDN);
  return r;
}

BigComplex operator-(const BigComplex& x, const BigComplex& y) {
  BigComplex r(std::max(x.precision(), y.precision()));
  mpfr_sub(r.re.get(), x.re.get(), y.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), x.im.get(), y.im.get(), MPFR_RNDN);
  return r;
}

BigComplex operator*(const BigComplex& x, const BigComplex& y) {
  const mpfr_prec_t p = std::max(x.precision(), y.precision());
  BigComplex r(p);
  BigFloat t(p);
  mpfr_mul(r.re.get(), x.re.get(), y.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), x.im.get(), y.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), x.re.get(), y.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), x.im.get(), y.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

BigComplex operator/(const BigComplex& x, const BigComplex& y) {
  const mpfr_prec_t p = std::max(x.precision(), y.precision());
  BigFloat den(p), t(p);
  mpfr_sqr(den.get(), y.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), y.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
  if (mpfr_zero_p(den.get())) throw std::domain_error("complex division by zero");
  BigComplex conj = y;
  mpfr_neg(conj.im.get(), conj.im.get(), MPFR_RNDN);
  BigComplex r = x * conj;
  mpfr_div(r.re.get(), r.re.get(), den.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
  return r;
}

BigFloat modulus(const BigComplex& z) {
  BigFloat r(z.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

namespace {

struct Horner {
  BigComplex value;
  BigComplex derivative;
};

Horner horner(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
  const mpfr_prec_t p = z.precision();
  Horner h{BigComplex(p), BigComplex(p)};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    h.derivative = h.derivative * z + h.value;
    h.value = h.value * z + *it;
  }
  return h;
}

}  // namespace

std::vector<RootDisc> isolate_roots(const QPoly& squarefree, mpfr_prec_t precision) {
  const int d = squarefree.degree();
  if (d < 1) throw std::invalid_argument("isolate_roots needs degree >= 1");
  const QPoly f = monic(squarefree);
  std::vector<BigComplex> coeffs;
  for (const auto& c : f.coefficients()) {
    BigComplex z(precision);
    mpfr_set_q(z.re.get(), c.get_mpq_t(), MPFR_RNDN);
    coeffs.push_back(std::move(z));
  }

  // Cauchy bound for the initial circle.
  double bound = 0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::fabs(f[static_cast<std::size_t>(i)].get_d()));
  bound = 1 + bound;
  std::vector<BigComplex> z;
  for (int k = 0; k < d; ++k) {
    const double angle = 2 * std::numbers::pi * k / d + 0.4;
    const double radius = std::min(bound, 1e300) * 0.7;
    z.emplace_back(radius * std::cos(angle), radius * std::sin(angle), precision);
  }

  const int bits = static_cast<int>(precision);
  const double converged = std::ldexp(1.0, std::max(-bits + 24, -1000));
  const double acceptable = std::ldexp(1.0, std::max(-bits / 2, -900));
  const BigComplex one(1.0, 0.0, precision);
  double last = 1;
  int polish = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0;
    for (int i = 0; i < d; ++i) {
      Horner h = horner(coeffs, z[static_cast<std::size_t>(i)]);
      if (mpfr_zero_p(h.value.re.get()) && mpfr_zero_p(h.value.im.get())) continue;
      BigComplex ratio = h.value / h.derivative;
      BigComplex repulsion(precision);
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        repulsion = repulsion + one / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      }
      BigComplex step = ratio / (one - ratio * repulsion);
      z[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] - step;
      const double scale = std::max(1.0, modulus(z[static_cast<std::size_t>(i)]).to_double());
      worst = std::max(worst, modulus(step).to_double() / scale);
    }
    last = worst;
    if (worst < converged && ++polish >= 2) break;
  }
  if (!(last < acceptable)) throw std::runtime_error("Aberth iteration did not converge");

  std::vector<RootDisc> discs;
  BigFloat slack(precision);
  mpfr_set_ui(slack.get(), 1, MPFR_RNDN);
  mpfr_div_2si(slack.get(), slack.get(), static_cast<long>(precision) / 2, MPFR_RNDU);
  for (int i = 0; i < d; ++i) {
    Horner h = horner(coeffs, z[static_cast<std::size_t>(i)]);
    BigComplex denom(1.0, 0.0, precision);
    for (int j = 0; j < d; ++j) {
      if (j != i) denom = denom * (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
    }
    BigFloat radius = modulus(h.value / denom);
    mpfr_mul_ui(radius.get(), radius.get(), static_cast<unsigned long>(2 * d), MPFR_RNDU);
    // Coefficients were rounded to the working precision; pad accordingly.
    BigFloat pad = modulus(z[static_cast<std::size_t>(i)]);
    mpfr_add_ui(pad.get(), pad.get(), 1, MPFR_RNDU);
    mpfr_mul(pad.get(), pad.get(), slack.get(), MPFR_RNDU);
    mpfr_add(radius.get(), radius.get(), pad.get(), MPFR_RNDU);
    discs.push_back({z[static_cast<std::size_t>(i)], radius});
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      BigFloat gap = modulus(discs[static_cast<std::size_t>(i)].center - discs[static_cast<std::size_t>(j)].center);
      BigFloat reach(precision);
      mpfr_add(reach.get(), discs[static_cast<std::size_t>(i)].radius.get(),
               discs[static_cast<std::size_t>(j)].radius.get(), MPFR_RNDU);
      if (!mpfr_greater_p(gap.get(), reach.get())) {
        throw std::runtime_error("root discs overlap at this precision");
      }
    }
  }
  return discs;
}

std::vector<std::pair<double, double>> approximate_roots(const std::vector<double>& coeffs) {
  using C = std::complex<double>;
  const int d = static_cast<int>(coeffs.size()) - 1;
  std::vector<std::pair<double, double>> out;
  if (d < 1) return out;
  std::vector<double> a = coeffs;
  for (auto& c : a) c /= coeffs.back();
  double bound = 0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::fabs(a[static_cast<std::size_t>(i)]));
  bound += 1;
  std::vector<C> z;
  for (int k = 0; k < d; ++k) z.push_back(std::polar(0.7 * bound, 2 * std::numbers::pi * k / d + 0.4));
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0;
    for (int i = 0; i < d; ++i) {
      C v = 0, dv = 0;
      for (int j = d; j >= 0; --j) {
        dv = dv * z[static_cast<std::size_t>(i)] + v;
        v = v * z[static_cast<std::size_t>(i)] + a[static_cast<std::size_t>(j)];
      }
      if (v == C(0)) continue;
      C ratio = v / dv;
      C rep = 0;
      for (int j = 0; j < d; ++j) {
        if (j != i) rep += 1.0 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      }
      C step = ratio / (1.0 - ratio * rep);
      z[static_cast<std::size_t>(i)] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (worst < 1e-15) break;
  }
  for (const auto& r : z) out.emplace_back(r.real(), r.imag());
  return out;
}

}  // namespace hybrid
