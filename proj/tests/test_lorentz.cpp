#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

#include "hybrid/lorentz/block.hpp"

using namespace hybrid;

namespace {

KElem k(const char* s) { return parse_kelem(s); }

// The two displayed matrices, entered entry by entry.
KMatrix literal_g1(std::size_t n) {
  KMatrix m = KMatrix::identity(n + 1);
  m(0, 0) = m(n, n) = k("3+2*rt2");
  m(0, n) = k("4+2*rt2");
  m(n, 0) = k("2+2*rt2");
  return m;
}

KMatrix literal_g2(std::size_t n) {
  KMatrix m = KMatrix::identity(n + 1);
  m(0, 0) = m(n, n) = k("(11+6*rt2)/7");
  m(0, n) = k("(4+6*rt2)/7");
  m(n, 0) = k("(18+6*rt2)/7");
  return m;
}

// Second intersection of the line gamma = t (alpha - 1) with the conic
// c alpha^2 - rt2 gamma^2 = c: the roots of the quadratic in alpha multiply
// to (-rt2 t^2 - c) / (c - rt2 t^2), and one root is 1.
KElem conic_alpha(const KElem& c, const KElem& t) {
  const KElem s = KElem::sqrt2() * t * t;
  return (-s - c) / (c - s);
}

long double acosh_oracle(const KElem& alpha) { return std::acosh(static_cast<long double>(oracle::value(alpha))); }

KElem random_c() {
  KElem c;
  do c = oracle::small_kelem(6, 3); while (sign(c) <= 0);
  return c;
}

KElem random_t(const KElem& c) {
  KElem t;
  do t = oracle::small_kelem(20, 3); while (sign(t) <= 0 || sign(KElem::sqrt2() * t * t - c) <= 0);
  return t;
}

}  // namespace

TEST_CASE("forms") {
  const QuadForm f = QuadForm::with_first(3, 2);
  CHECK(f.to_string() == "diag(3, 1, -rt2)");
  CHECK(QuadForm::parse("diag(3, 1, -rt2)") == f);
  CHECK(f.coefficient(2) == -KElem::sqrt2());
  CHECK_THROWS_AS(QuadForm({KElem(1), KElem(-1)}), std::invalid_argument);
  CHECK_THROWS_AS(QuadForm::parse("diag(1, 1, -1)"), std::invalid_argument);
}

TEST_CASE("isometry checks") {
  for (std::size_t n = 2; n <= 10; ++n) {
    const QuadForm f1 = QuadForm::unit(n), f2 = QuadForm::with_first(3, n);
    CHECK(is_isometry(KMatrix::identity(n + 1), f1));
    CHECK(is_isometry(literal_g1(n), f1));
    CHECK(in_O_prime(lift(literal_g1(n)), f1));
    CHECK(is_isometry(literal_g2(n), f2));
    CHECK(in_O_prime(lift(literal_g2(n)), f2));
    CHECK_FALSE(is_isometry(literal_g2(n), f1));
  }
  const QuadForm f = QuadForm::unit(2);
  KMatrix bad = literal_g1(2);
  bad(0, 0) = k("3+3*rt2");
  CHECK_FALSE(is_isometry(bad, f));
  CHECK_THROWS_AS(in_O_prime(lift(bad), f), std::domain_error);
  CHECK_THROWS_AS(is_isometry(KMatrix::identity(4), f), std::invalid_argument);
  CHECK_FALSE(in_O_prime(lift(-KMatrix::identity(3)), f));
  KMatrix flip = KMatrix::identity(3);
  flip(2, 2) = KElem(-1);
  CHECK_FALSE(in_O_prime(lift(flip * literal_g1(2)), f));
  CHECK_THROWS_AS(Isometry(lift(bad), f), std::domain_error);
}

TEST_CASE("isometry group operations") {
  const Isometry g(lift(literal_g1(3)), QuadForm::unit(3));
  CHECK(g * g.inverse() == Isometry::identity(g.form()));
  CHECK(g.inverse() * g == Isometry::identity(g.form()));
  CHECK(g.sheet_preserving());
}

TEST_CASE("conic parametrization") {
  const ABlockElement g1 = param_block(KElem(1), KElem(1), 2);
  CHECK(g1.alpha() == k("3+2*rt2"));
  CHECK(g1.gamma() == k("2+2*rt2"));
  CHECK(g1.matrix() == literal_g1(2));
  const ABlockElement g2 = param_block(KElem(3), k("3/2*rt2"), 2);
  CHECK(g2.alpha() == k("(11+6*rt2)/7"));
  CHECK(g2.gamma() == k("(18+6*rt2)/7"));
  CHECK(g2.matrix() == literal_g2(2));
  CHECK(conic_alpha(KElem(1), KElem(1)) == g1.alpha());
  CHECK(conic_alpha(KElem(3), k("3/2*rt2")) == g2.alpha());
  const ABlockElement g10 = param_block(KElem(1), KElem(10), 2);
  CHECK(oracle::value(g10.alpha()) == doctest::Approx(1.01424284776612).epsilon(1e-13));
  CHECK_THROWS_AS(param_block(KElem::sqrt2(), KElem(1)), std::domain_error);
  CHECK_THROWS_AS(param_block(KElem(3), KElem(1)), std::domain_error);
  CHECK_THROWS_AS(ABlockElement(KElem(2), KElem(1), KElem(1), 2), std::invalid_argument);
}

TEST_CASE("parametrized blocks are exact isometries") {
  for (int i = 0; i < 500; ++i) {
    const KElem c = random_c(), t = random_t(c);
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(1, 4));
    const ABlockElement g = param_block(c, t, n);
    CHECK(c * g.alpha() * g.alpha() - KElem::sqrt2() * g.gamma() * g.gamma() == c);
    CHECK(g.block_determinant() == KElem(1));
    CHECK(g.alpha() == conic_alpha(c, t));
    CHECK(g.parameter() == t);
    CHECK(sign(g.alpha() - KElem(1)) > 0);
    const TMatrix m = lift(g.matrix());
    CHECK(is_isometry(m, g.form()));
    CHECK(in_O_prime(m, g.form()));
  }
}

TEST_CASE("leading eigenvalues and lengths") {
  const ABlockElement g1 = param_block(KElem(1), KElem(1));
  const ABlockElement g2 = param_block(KElem(3), k("3/2*rt2"));
  const QuadAlgNum l1 = leading_eigenvalue(g1), l2 = leading_eigenvalue(g2);
  CHECK(l1.trace() == k("6+4*rt2"));
  CHECK(l1.norm() == KElem(1));
  CHECK(l2.trace() == k("(22+12*rt2)/7"));
  // Values from the 256-bit quadratic-formula oracle.
  CHECK(oracle::larger_root(l1.trace(), l1.norm()) == doctest::Approx(11.5704270157665).epsilon(1e-14));
  CHECK(oracle::larger_root(l2.trace(), l2.norm()) == doctest::Approx(5.38139792830988).epsilon(1e-14));
  CHECK(l1.numeric().midpoint() == doctest::Approx(11.5704270157665).epsilon(1e-14));
  CHECK(l2.numeric().midpoint() == doctest::Approx(5.38139792830988).epsilon(1e-14));
  const RealInterval len1 = translation_length(g1), len2 = translation_length(g2);
  CHECK(static_cast<double>(acosh_oracle(g1.alpha())) == doctest::Approx(2.44845244767808).epsilon(1e-13));
  CHECK(len1.midpoint() == doctest::Approx(2.44845244767808).epsilon(1e-13));
  CHECK(len2.midpoint() == doctest::Approx(1.68294817839747).epsilon(1e-13));
  CHECK(len1.width() < 1e-30);
  const RealInterval len10 = translation_length(param_block(KElem(1), KElem(10)));
  CHECK(len10.midpoint() == doctest::Approx(0.168577375756566).epsilon(1e-12));
  CHECK_THROWS_AS(leading_eigenvalue(ABlockElement(KElem(1), KElem(0), KElem(1), 2)), std::domain_error);
  for (int i = 0; i < 100; ++i) {
    const KElem c = random_c();
    const ABlockElement g = param_block(c, random_t(c));
    const QuadAlgNum l = leading_eigenvalue(g);
    CHECK(l.trace() == KElem(2) * g.alpha());
    CHECK(l.norm() == KElem(1));
    CHECK(translation_length(g, 96).midpoint() == doctest::Approx(static_cast<double>(acosh_oracle(g.alpha()))));
  }
}

TEST_CASE("lengths decrease along the integer scan") {
  double previous = INFINITY;
  for (long t = 1; t <= 50; ++t) {
    const double len = translation_length(param_block(KElem(1), KElem(t))).midpoint();
    CHECK(len < previous);
    CHECK(approximate_length(KElem(1), KElem(t)) == doctest::Approx(len).epsilon(1e-12));
    previous = len;
  }
}

TEST_CASE("small element search") {
  const SearchResult a = find_small_element(KElem(1), 2.5, 100);
  CHECK(a.t == KElem(1));
  CHECK(a.length.midpoint() == doctest::Approx(2.44845244767808));
  const SearchResult b = find_small_element(KElem(1), 0.25, 100);
  CHECK(b.t == KElem(7));
  CHECK(b.length.midpoint() == doctest::Approx(0.241421921507159).epsilon(1e-12));
  CHECK(translation_length(param_block(KElem(1), KElem(6))).lower() > 0.25);
  try {
    find_small_element(KElem(1), 1e-9, 3);
    FAIL("search should have been exhausted");
  } catch (const SearchExhausted& e) {
    CHECK(e.best_length() > 0.4);
    CHECK(height(e.best_t()) <= 3);
  }
  // Integers up to 3 miss 0.5; an element p + (q/2) rt2 of height <= 3 does not.
  CHECK(translation_length(param_block(KElem(1), KElem(3))).lower() > 0.5);
  const SearchResult c = find_small_element(KElem(1), 0.5, 3);
  CHECK_FALSE(c.t.is_rational());
  CHECK(height(c.t) <= 3);
  CHECK(c.length.upper() < 0.5);
  CHECK(find_small_element(KElem(3), 0.1, 1000).element.c() == KElem(3));
  CHECK_THROWS_AS(find_small_element(KElem(1), 0, 10), std::invalid_argument);
}

TEST_CASE("conjugating g2 into the unit form") {
  for (std::size_t n : {2u, 3u, 6u}) {
    const FieldPtr f = TowerField::create(3);
    const TowerElem root = TowerElem::sqrt_a(f);
    TMatrix d = TMatrix::identity(n + 1), dinv = TMatrix::identity(n + 1);
    d(0, 0) = root;
    dinv(0, 0) = root.inverse();
    const TMatrix conj = d * lift(literal_g2(n)) * dinv;
    CHECK(is_isometry(conj, QuadForm::unit(n)));
    CHECK(in_O_prime(conj, QuadForm::unit(n)));
    CHECK_FALSE(conj(0, n).in_k());
  }
}

TEST_CASE("similarity discriminant obstruction") {
  const QuadForm f = QuadForm::unit(3);
  CHECK(similarity_discriminant_obstruction(f, f) == Similarity::inconclusive);
  for (long a : {3L, 17L}) {
    const QuadForm g = QuadForm::with_first(a, 3);
    CHECK_FALSE(oracle::square_in_k(discriminant(f) / discriminant(g)));
    CHECK(similarity_discriminant_obstruction(f, g) == Similarity::obstructed);
  }
  CHECK(similarity_discriminant_obstruction(f, QuadForm::with_first(4, 3)) == Similarity::inconclusive);
  CHECK(similarity_discriminant_obstruction(f, QuadForm::with_first(2, 3)) == Similarity::inconclusive);
  CHECK(similarity_discriminant_obstruction(QuadForm::unit(2), QuadForm::with_first(3, 2)) ==
        Similarity::inconclusive);
  CHECK_THROWS_AS(similarity_discriminant_obstruction(f, QuadForm::unit(2)), std::invalid_argument);
}

TEST_CASE("matrix text format") {
  const FieldPtr f = TowerField::create(3);
  const QuadForm form = QuadForm::unit(2);
  TMatrix m = lift(literal_g1(2));
  m(0, 1) = TowerElem(KElem(0), KElem(1), f);
  const std::string text = to_text(m, form, f);
  const MatrixFile back = parse_matrix_text(text);
  CHECK(back.form == form);
  CHECK(back.matrix == m);
  CHECK(back.field->a() == 3);
  const MatrixFile g1 = parse_matrix_text(
      "# g1\nform: diag(1, 1, -rt2)\n3+2*rt2, 0, 4+2*rt2\n0, 1, 0\n2+2*rt2, 0, 3+2*rt2\n");
  CHECK(g1.matrix == lift(literal_g1(2)));
  CHECK_THROWS_AS(parse_matrix_text("1, 0\n0, 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text("form: diag(1, -rt2)\n1, 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text("form: diag(1, -rt2)\n1, 0\n0, rtA\n"), std::invalid_argument);
}
