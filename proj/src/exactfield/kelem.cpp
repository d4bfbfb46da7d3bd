#include "hybrid/exactfield/kelem.hpp"

#include <stdexcept>

namespace hybrid {

KElem::KElem(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

KElem& KElem::operator+=(const KElem& y) {
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

KElem& KElem::operator-=(const KElem& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

KElem& KElem::operator*=(const KElem& y) {
  Rational a = a_ * y.a_ + 2 * b_ * y.b_;
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

KElem KElem::inverse() const {
  Rational n = norm_k(*this);
  if (sgn(n) == 0) throw std::domain_error("division by zero in Q(sqrt 2)");
  return KElem(a_ / n, -b_ / n);
}

KElem& KElem::operator/=(const KElem& y) { return *this *= y.inverse(); }

std::string KElem::to_string() const {
  if (sgn(b_) == 0) return hybrid::to_string(a_);
  if (sgn(a_) == 0) return hybrid::to_string(b_) + "*rt2";
  std::string out = hybrid::to_string(a_);
  out += sgn(b_) > 0 ? "+" : "-";
  out += hybrid::to_string(Rational(abs(b_))) + "*rt2";
  return out;
}

KElem galois_conjugate(const KElem& x) { return KElem(x.rational_part(), -x.sqrt2_part()); }

Rational norm_k(const KElem& x) {
  const Rational& a = x.rational_part();
  const Rational& b = x.sqrt2_part();
  return a * a - 2 * b * b;
}

int sign(const KElem& x) {
  const int sa = sgn(x.rational_part());
  const int sb = sgn(x.sqrt2_part());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 2b^2 wins.
  const int cmp = sgn(norm_k(x));
  return cmp > 0 ? sa : (cmp < 0 ? sb : 0);
}

Integer height(const KElem& x) {
  Integer h = 0;
  for (const Rational* q : {&x.rational_part(), &x.sqrt2_part()}) {
    if (sgn(*q) == 0) continue;
    Integer p = abs(q->get_num());
    if (p > h) h = p;
    if (q->get_den() > h) h = q->get_den();
  }
  return h;
}

SquareTest is_square_in_k(const KElem& x) {
  if (x.is_zero()) return {true, KElem()};
  const Rational& a = x.rational_part();
  const Rational& b = x.sqrt2_part();
  if (sgn(b) == 0) {
    if (auto r = rational_sqrt(a)) return {true, KElem(*r)};
    if (auto r = rational_sqrt(a / 2)) return {true, KElem(Rational(0), *r)};
    return {false, std::nullopt};
  }
  // (p + q*rt2)^2 = p^2 + 2q^2 + 2pq*rt2, so p^2 is a root of 2P^2 - 2aP + b^2 = 0,
  // i.e. p^2 = (a +- sqrt(norm)) / 2.
  auto s = rational_sqrt(norm_k(x));
  if (!s) return {false, std::nullopt};
  for (const Rational& p2 : {Rational((a + *s) / 2), Rational((a - *s) / 2)}) {
    if (sgn(p2) <= 0) continue;
    auto p = rational_sqrt(p2);
    if (!p) continue;
    KElem root(*p, b / (2 * *p));
    if (root * root != x) continue;
    if (sign(root) < 0) root = -root;
    return {true, root};
  }
  return {false, std::nullopt};
}

RealInterval embed(const KElem& x, mpfr_prec_t precision) {
  RealInterval a = RealInterval::point(x.rational_part(), precision);
  if (x.is_rational()) return a;
  return a + RealInterval::point(x.sqrt2_part(), precision) * RealInterval::sqrt2(precision);
}

}  // namespace hybrid
