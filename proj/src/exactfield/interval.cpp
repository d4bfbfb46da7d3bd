#include "hybrid/exactfield/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hybrid {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t precision) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(precision, 53));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

namespace {

mpfr_prec_t joint(const RealInterval& x, const RealInterval& y) {
  return std::max(x.precision(), y.precision());
}

using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Image of a monotone increasing function.
RealInterval increasing(const RealInterval& x, Unary f) {
  BigFloat lo(x.precision()), hi(x.precision());
  f(lo.get(), x.lo().get(), MPFR_RNDD);
  f(hi.get(), x.hi().get(), MPFR_RNDU);
  return RealInterval::from_bounds(lo, hi);
}

}  // namespace

RealInterval::RealInterval(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

RealInterval RealInterval::point(const Rational& q, mpfr_prec_t precision) {
  RealInterval r(precision);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::point(double x, mpfr_prec_t precision) {
  RealInterval r(std::max<mpfr_prec_t>(precision, 53));
  mpfr_set_d(r.lo_.get(), x, MPFR_RNDD);
  mpfr_set_d(r.hi_.get(), x, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_bounds(const BigFloat& lo, const BigFloat& hi) {
  if (mpfr_nan_p(lo.get()) || mpfr_nan_p(hi.get())) {
    throw std::domain_error("interval endpoint is NaN");
  }
  if (mpfr_greater_p(lo.get(), hi.get())) {
    throw std::logic_error("interval with lo > hi");
  }
  RealInterval r(std::max(lo.precision(), hi.precision()));
  mpfr_set(r.lo_.get(), lo.get(), MPFR_RNDD);
  mpfr_set(r.hi_.get(), hi.get(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::sqrt2(mpfr_prec_t precision) {
  RealInterval r(precision);
  mpfr_set_ui(r.lo_.get(), 2, MPFR_RNDN);
  mpfr_set_ui(r.hi_.get(), 2, MPFR_RNDN);
  mpfr_sqrt(r.lo_.get(), r.lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), r.hi_.get(), MPFR_RNDU);
  return r;
}

double RealInterval::midpoint() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

double RealInterval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w.to_double(MPFR_RNDU);
}

bool RealInterval::contains(double x) const {
  return mpfr_cmp_d(lo_.get(), x) <= 0 && mpfr_cmp_d(hi_.get(), x) >= 0;
}

bool RealInterval::contains(const RealInterval& other) const {
  return mpfr_lessequal_p(lo_.get(), other.lo_.get()) &&
         mpfr_greaterequal_p(hi_.get(), other.hi_.get());
}

bool RealInterval::overlaps(const RealInterval& other) const {
  return mpfr_lessequal_p(lo_.get(), other.hi_.get()) &&
         mpfr_lessequal_p(other.lo_.get(), hi_.get());
}

bool RealInterval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool RealInterval::strictly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool RealInterval::strictly_negative() const { return mpfr_sgn(hi_.get()) < 0; }

std::string RealInterval::to_string(int digits) const {
  auto render = [digits](const BigFloat& v, mpfr_rnd_t rnd) {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 40);
    const char* fmt = rnd == MPFR_RNDD ? "%.*RDg" : "%.*RUg";
    mpfr_snprintf(buf.data(), buf.size(), fmt, digits, v.get());
    return std::string(buf.data());
  };
  return "[" + render(lo_, MPFR_RNDD) + ", " + render(hi_, MPFR_RNDU) + "]";
}

RealInterval RealInterval::operator-() const {
  RealInterval r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

RealInterval operator+(const RealInterval& x, const RealInterval& y) {
  RealInterval r(joint(x, y));
  mpfr_add(r.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
  return r;
}

RealInterval operator-(const RealInterval& x, const RealInterval& y) {
  RealInterval r(joint(x, y));
  mpfr_sub(r.lo_.get(), x.lo_.get(), y.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), x.hi_.get(), y.lo_.get(), MPFR_RNDU);
  return r;
}

RealInterval operator*(const RealInterval& x, const RealInterval& y) {
  const mpfr_prec_t prec = joint(x, y);
  RealInterval r(prec);
  BigFloat down(prec), up(prec);
  bool first = true;
  for (const BigFloat* a : {&x.lo_, &x.hi_}) {
    for (const BigFloat* b : {&y.lo_, &y.hi_}) {
      mpfr_mul(down.get(), a->get(), b->get(), MPFR_RNDD);
      mpfr_mul(up.get(), a->get(), b->get(), MPFR_RNDU);
      if (first || mpfr_less_p(down.get(), r.lo_.get())) mpfr_set(r.lo_.get(), down.get(), MPFR_RNDD);
      if (first || mpfr_greater_p(up.get(), r.hi_.get())) mpfr_set(r.hi_.get(), up.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

RealInterval operator/(const RealInterval& x, const RealInterval& y) {
  if (y.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  RealInterval recip(y.precision());
  mpfr_ui_div(recip.lo_.get(), 1, y.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(recip.hi_.get(), 1, y.lo_.get(), MPFR_RNDU);
  return x * recip;
}

RealInterval hull(const RealInterval& x, const RealInterval& y) {
  BigFloat lo = mpfr_lessequal_p(x.lo().get(), y.lo().get()) ? x.lo() : y.lo();
  BigFloat hi = mpfr_greaterequal_p(x.hi().get(), y.hi().get()) ? x.hi() : y.hi();
  return RealInterval::from_bounds(lo, hi);
}

RealInterval abs(const RealInterval& x) {
  if (mpfr_sgn(x.lo().get()) >= 0) return x;
  if (mpfr_sgn(x.hi().get()) <= 0) return -x;
  BigFloat lo(x.precision());
  BigFloat hi(x.precision());
  mpfr_neg(hi.get(), x.lo().get(), MPFR_RNDU);
  if (mpfr_less_p(hi.get(), x.hi().get())) mpfr_set(hi.get(), x.hi().get(), MPFR_RNDU);
  return RealInterval::from_bounds(lo, hi);
}

RealInterval sqrt(const RealInterval& x) {
  if (x.strictly_negative()) throw std::domain_error("sqrt of a negative interval");
  BigFloat lo(x.precision()), hi(x.precision());
  if (mpfr_sgn(x.lo().get()) > 0) mpfr_sqrt(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), x.hi().get(), MPFR_RNDU);
  return RealInterval::from_bounds(lo, hi);
}

RealInterval exp(const RealInterval& x) { return increasing(x, mpfr_exp); }

RealInterval log(const RealInterval& x) {
  if (!x.strictly_positive()) throw std::domain_error("log of an interval not bounded away from zero");
  return increasing(x, mpfr_log);
}

RealInterval sinh(const RealInterval& x) { return increasing(x, mpfr_sinh); }

RealInterval cosh(const RealInterval& x) {
  RealInterval a = abs(x);
  return increasing(a, mpfr_cosh);
}

RealInterval acosh(const RealInterval& x) {
  if (mpfr_cmp_ui(x.hi().get(), 1) < 0) throw std::domain_error("acosh of an interval below 1");
  BigFloat lo(x.precision()), hi(x.precision());
  if (mpfr_cmp_ui(x.lo().get(), 1) > 0) mpfr_acosh(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_acosh(hi.get(), x.hi().get(), MPFR_RNDU);
  return RealInterval::from_bounds(lo, hi);
}

RealInterval acos(const RealInterval& x) {
  if (mpfr_cmp_si(x.hi().get(), -1) < 0 || mpfr_cmp_ui(x.lo().get(), 1) > 0) {
    throw std::domain_error("acos of an interval outside [-1, 1]");
  }
  BigFloat lo(x.precision()), hi(x.precision());
  BigFloat top(x.hi()), bottom(x.lo());
  if (mpfr_cmp_ui(top.get(), 1) > 0) mpfr_set_ui(top.get(), 1, MPFR_RNDN);
  if (mpfr_cmp_si(bottom.get(), -1) < 0) mpfr_set_si(bottom.get(), -1, MPFR_RNDN);
  mpfr_acos(lo.get(), top.get(), MPFR_RNDD);
  mpfr_acos(hi.get(), bottom.get(), MPFR_RNDU);
  return RealInterval::from_bounds(lo, hi);
}

RealInterval root4(const RealInterval& x) { return sqrt(sqrt(x)); }

}  // namespace hybrid
