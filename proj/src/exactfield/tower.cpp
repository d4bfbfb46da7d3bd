#include "hybrid/exactfield/tower.hpp"

#include <stdexcept>

namespace hybrid {

std::shared_ptr<const TowerField> TowerField::create(const Rational& a) {
  if (sgn(a) <= 0) throw std::invalid_argument("tower parameter a must be positive, got " + to_string(a));
  if (is_square_in_k(KElem(a)).is_square) {
    throw std::invalid_argument("tower parameter a = " + to_string(a) + " is a square in Q(sqrt 2)");
  }
  return std::shared_ptr<const TowerField>(new TowerField(a));
}

FieldPtr common_field(const FieldPtr& x, const FieldPtr& y) {
  if (!x) return y;
  if (!y || x == y) return x;
  if (x->a() != y->a()) {
    throw std::invalid_argument("mixing elements of k(sqrt " + to_string(x->a()) + ") and k(sqrt " +
                                to_string(y->a()) + ")");
  }
  return x;
}

TowerElem::TowerElem(KElem u, KElem v, FieldPtr field)
    : u_(std::move(u)), v_(std::move(v)), field_(std::move(field)) {
  if (!field_ && !v_.is_zero()) throw std::invalid_argument("sqrt(a) coordinate without a tower field");
}

TowerElem& TowerElem::operator+=(const TowerElem& y) {
  field_ = common_field(field_, y.field_);
  u_ += y.u_;
  v_ += y.v_;
  return *this;
}

TowerElem& TowerElem::operator-=(const TowerElem& y) {
  field_ = common_field(field_, y.field_);
  u_ -= y.u_;
  v_ -= y.v_;
  return *this;
}

TowerElem& TowerElem::operator*=(const TowerElem& y) {
  field_ = common_field(field_, y.field_);
  if (v_.is_zero() && y.v_.is_zero()) {
    u_ *= y.u_;
    return *this;
  }
  const KElem a(field_->a());
  KElem u = u_ * y.u_ + a * v_ * y.v_;
  KElem v = u_ * y.v_ + v_ * y.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

TowerElem TowerElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in k(sqrt a)");
  if (v_.is_zero()) return TowerElem(u_.inverse());
  // (u + v rtA)^-1 = (u - v rtA) / (u^2 - a v^2); the denominator is nonzero
  // because a is not a square in k.
  KElem n = u_ * u_ - KElem(field_->a()) * v_ * v_;
  KElem inv = n.inverse();
  return TowerElem(u_ * inv, -v_ * inv, field_);
}

TowerElem& TowerElem::operator/=(const TowerElem& y) {
  field_ = common_field(field_, y.field_);
  return *this *= y.inverse();
}

std::string TowerElem::to_string() const {
  if (v_.is_zero()) return u_.to_string();
  return "(" + u_.to_string() + ")+(" + v_.to_string() + ")*rtA";
}

TowerElem conjugate_over_k(const TowerElem& x) {
  return TowerElem(x.k_part(), -x.sqrt_a_part(), x.field());
}

int sign(const TowerElem& x) {
  const int su = sign(x.k_part());
  const int sv = sign(x.sqrt_a_part());
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: compare u^2 with a v^2 exactly inside k.
  const KElem& u = x.k_part();
  const KElem& v = x.sqrt_a_part();
  const int cmp = sign(u * u - KElem(x.field()->a()) * v * v);
  return cmp > 0 ? su : (cmp < 0 ? sv : 0);
}

RealInterval embed(const TowerElem& x, mpfr_prec_t precision) {
  RealInterval u = embed(x.k_part(), precision);
  if (x.in_k()) return u;
  RealInterval root = sqrt(RealInterval::point(x.field()->a(), precision));
  return u + embed(x.sqrt_a_part(), precision) * root;
}

}  // namespace hybrid
