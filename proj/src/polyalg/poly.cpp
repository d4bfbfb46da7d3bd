#include "hybrid/polyalg/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hybrid {

QDivision divmod(const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = p.coefficients();
  const int dd = d.degree();
  if (p.degree() < dd) return {QPoly(), p};
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dd + 1), Rational(0));
  const Rational& lead = d.leading();
  for (int i = p.degree(); i >= dd; --i) {
    Rational f = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= f * d.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return Rational(1 / p.leading()) * p;
}

QPoly gcd(const QPoly& p, const QPoly& q) {
  QPoly a = p;
  QPoly b = q;
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return monic(p);
  return monic(divmod(p, gcd(p, p.derivative())).quotient);
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() <= 0) return out;
  const QPoly f = monic(p);
  const QPoly df = f.derivative();
  QPoly b = gcd(f, df);
  QPoly c = divmod(f, b).quotient;
  QPoly d = divmod(df, b).quotient - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    QPoly a = gcd(c, d);
    c = divmod(c, a).quotient;
    d = divmod(d, a).quotient - c.derivative();
    if (a.degree() > 0) out.emplace_back(a, i);
  }
  return out;
}

bool has_integer_coefficients(const QPoly& p) {
  for (const auto& c : p.coefficients()) {
    if (!is_integer(c)) return false;
  }
  return true;
}

QPoly to_qpoly(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& z : p.coefficients()) c.emplace_back(z);
  return QPoly(std::move(c));
}

ZPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : p.coefficients()) den = lcm(den, c.get_den());
  std::vector<Integer> z;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (den / c.get_den());
    content = gcd(content, v);
    z.push_back(v);
  }
  if (sgn(p.leading()) < 0) content = -content;
  for (auto& v : z) v /= content;
  return ZPoly(std::move(z));
}

ZPoly to_zpoly(const QPoly& p) {
  std::vector<Integer> z;
  for (const auto& c : p.coefficients()) {
    if (!is_integer(c)) throw std::domain_error("polynomial has a non-integer coefficient " + to_string(c));
    z.push_back(c.get_num());
  }
  return ZPoly(std::move(z));
}

ZPoly reflect_monic(const ZPoly& p) {
  std::vector<Integer> c = p.coefficients();
  const bool flip_all = p.degree() % 2 != 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool odd = i % 2 != 0;
    if (odd != flip_all) c[i] = -c[i];
  }
  return ZPoly(std::move(c));
}

RealInterval evaluate(const QPoly& p, const RealInterval& x) {
  RealInterval acc(x.precision());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + RealInterval::point(*it, x.precision());
  }
  return acc;
}

namespace {

template <class C>
std::string list_form(const std::vector<C>& coeffs) {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ", ";
    out += coeffs[i].get_str();
  }
  return out + "]";
}

}  // namespace

std::string to_string(const QPoly& p) { return list_form(p.coefficients()); }
std::string to_string(const ZPoly& p) { return list_form(p.coefficients()); }

QPoly parse_qpoly(std::string_view text) {
  std::string s(text);
  const auto open = s.find('[');
  const auto close = s.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw std::invalid_argument("polynomial text must look like [a0, a1, ...]: '" + s + "'");
  }
  std::vector<Rational> coeffs;
  std::stringstream body(s.substr(open + 1, close - open - 1));
  std::string token;
  while (std::getline(body, token, ',')) {
    const auto b = token.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = token.find_last_not_of(" \t");
    coeffs.push_back(parse_rational(token.substr(b, e - b + 1)));
  }
  return QPoly(std::move(coeffs));
}

std::string pretty(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace hybrid
