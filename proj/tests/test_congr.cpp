#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include <set>

#include "hybrid/congr/congruence.hpp"
#include "hybrid/lorentz/block.hpp"

using namespace hybrid;

namespace {

KElem k(const char* s) { return parse_kelem(s); }

KElem random_integral(long bound) {
  return KElem(Rational(oracle::uniform(-bound, bound)), Rational(oracle::uniform(-bound, bound)));
}

Isometry g1(std::size_t n = 2) { return param_block(KElem(1), KElem(1), n).isometry(); }

// Swap of x_i and x_j on the unit form.
Isometry swap(std::size_t n, std::size_t i, std::size_t j) {
  TMatrix m = TMatrix::identity(n + 1);
  m(i, i) = m(j, j) = TowerElem(0);
  m(i, j) = m(j, i) = TowerElem(1);
  return Isometry(m, QuadForm::unit(n));
}

}  // namespace

TEST_CASE("ideals") {
  CHECK(ZsqrtIdeal::parse("rt2").index() == 2);
  CHECK(ZsqrtIdeal::parse("7").index() == 49);
  CHECK(ZsqrtIdeal::parse("1+rt2").index() == 1);
  CHECK(ZsqrtIdeal::parse("3+rt2").index() == 7);
  CHECK(ZsqrtIdeal::parse("rt2").to_string() == "(1*rt2)");
  CHECK_THROWS_AS(ZsqrtIdeal::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(ZsqrtIdeal::parse("1/2"), std::invalid_argument);
}

TEST_CASE("divisibility") {
  const ZsqrtIdeal rt2 = ZsqrtIdeal::parse("rt2");
  CHECK(divides(rt2, k("2+2*rt2")));
  CHECK_FALSE(divides(rt2, k("3+2*rt2")));
  CHECK(divides(rt2, k("rt2")));
  CHECK(divides(rt2, KElem(0)));
  CHECK(divides(ZsqrtIdeal::parse("7"), k("7+14*rt2")));
  CHECK_FALSE(divides(ZsqrtIdeal::parse("7"), k("7+rt2")));
  // 7 = (3 + rt2)(3 - rt2) splits.
  CHECK(divides(ZsqrtIdeal::parse("3+rt2"), KElem(7)));
  CHECK_FALSE(divides(ZsqrtIdeal::parse("3+rt2"), k("3-rt2")));
  CHECK(divides(ZsqrtIdeal::parse("1+rt2"), k("5-3*rt2")));
  CHECK_THROWS_AS(divides(rt2, k("1/2")), std::invalid_argument);

  for (int i = 0; i < 300; ++i) {
    KElem pi;
    do pi = random_integral(6); while (pi.is_zero());
    const ZsqrtIdeal ideal(pi);
    const KElem y = random_integral(20);
    CHECK(divides(ideal, pi * y));
    if (ideal.index() > 1) CHECK_FALSE(divides(ideal, pi * y + KElem(1)));
  }
}

TEST_CASE("the residue ring has index many classes") {
  // Greedy class count over a box that covers every residue.
  for (const char* g : {"rt2", "2", "3", "1+rt2", "3+rt2", "2+rt2", "1+2*rt2"}) {
    const ZsqrtIdeal ideal = ZsqrtIdeal::parse(g);
    const long n = ideal.index().get_si();
    std::vector<KElem> reps;
    for (long a = 0; a < n; ++a) {
      for (long b = 0; b < n; ++b) {
        const KElem x{Rational(a), Rational(b)};
        bool fresh = true;
        for (const auto& r : reps) {
          if (divides(ideal, x - r)) {
            fresh = false;
            break;
          }
        }
        if (fresh) reps.push_back(x);
      }
    }
    CHECK(static_cast<long>(reps.size()) == n);
  }
}

TEST_CASE("integral matrices") {
  CHECK(is_integral_matrix(g1()));
  CHECK(is_integral_matrix(Isometry::identity(QuadForm::with_first(3, 2))));
  CHECK_FALSE(is_integral_matrix(param_block(KElem(3), k("3/2*rt2")).isometry()));
  CHECK_FALSE(is_integral_matrix(param_block(KElem(1), KElem(2)).isometry()));
  const FieldPtr f = TowerField::create(Rational(3));
  // g2 conjugated onto the unit form has entries with a sqrt(3) part.
  const Isometry g2 = param_block(KElem(3), k("3/2*rt2")).isometry();
  TMatrix c = g2.matrix();
  const TowerElem root = TowerElem::sqrt_a(f);
  for (std::size_t j = 1; j < 3; ++j) c(0, j) = root * c(0, j);
  for (std::size_t i = 1; i < 3; ++i) c(i, 0) = c(i, 0) / root;
  CHECK_THROWS_AS(is_integral_matrix(Isometry(c, QuadForm::unit(2))), std::invalid_argument);
}

TEST_CASE("principal congruence membership") {
  const Isometry g = g1();
  CHECK(in_principal_congruence(g, ZsqrtIdeal::parse("rt2")));
  CHECK(in_principal_congruence(g, ZsqrtIdeal::parse("2")));
  CHECK_FALSE(in_principal_congruence(g, ZsqrtIdeal::parse("2*rt2")));
  CHECK_FALSE(in_principal_congruence(g, ZsqrtIdeal::parse("7")));
  CHECK(in_principal_congruence(g, ZsqrtIdeal::parse("1+rt2")));
  CHECK(in_principal_congruence(Isometry::identity(QuadForm::unit(3)), ZsqrtIdeal::parse("7")));
  CHECK_THROWS_AS(in_principal_congruence(param_block(KElem(1), KElem(2)).isometry(), ZsqrtIdeal::parse("2")),
                  std::invalid_argument);
  CHECK_FALSE(in_principal_congruence(swap(2, 0, 1), ZsqrtIdeal::parse("rt2")));
}

TEST_CASE("congruence subgroups are subgroups") {
  const std::size_t n = 3;
  const Isometry a = g1(n);
  const Isometry p = swap(n, 0, 1);
  const Isometry b = p * a * p.inverse();
  const std::vector<Isometry> gens{a, b, a.inverse(), b.inverse()};
  const std::vector<ZsqrtIdeal> levels{ZsqrtIdeal::parse("rt2"), ZsqrtIdeal::parse("2")};
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      const Isometry xy = x * y;
      CHECK(is_integral_matrix(xy));
      for (const auto& level : levels) CHECK(in_principal_congruence(xy, level));
      CHECK(in_principal_congruence(xy.inverse(), ZsqrtIdeal::parse("2")));
    }
  }
  // Level (2) sits inside level (rt2).
  for (const auto& x : gens) {
    if (in_principal_congruence(x, ZsqrtIdeal::parse("2"))) CHECK(in_principal_congruence(x, ZsqrtIdeal::parse("rt2")));
  }
}
