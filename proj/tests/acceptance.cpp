// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "hybrid/arith/traces.hpp"
#include "hybrid/combin/bracelets.hpp"
#include "hybrid/congr/congruence.hpp"
#include "hybrid/hypgeom/geometry.hpp"
#include "hybrid/lorentz/block.hpp"
#include "hybrid/polyalg/mahler.hpp"
#include "oracles.hpp"

using namespace hybrid;

namespace {

int failures = 0;

void criterion(int id, const std::string& title, const std::function<std::string()>& body) {
  std::string detail;
  bool ok = false;
  try {
    detail = body();
    ok = detail.rfind("FAIL", 0) != 0;
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
}

std::string fail(const std::string& why) { return "FAIL " + why; }

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

KElem k(const char* s) { return parse_kelem(s); }

std::string padded_text(const char* alpha, const char* top_right, const char* bottom_left, const char* c,
                        std::size_t n) {
  std::string out = std::string("form: diag(") + c;
  for (std::size_t i = 1; i < n; ++i) out += ", 1";
  out += ", -rt2)\n";
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (j) out += ", ";
      if (i == 0 && j == 0) out += alpha;
      else if (i == n && j == n) out += alpha;
      else if (i == 0 && j == n) out += top_right;
      else if (i == n && j == 0) out += bottom_left;
      else out += i == j ? "1" : "0";
    }
    out += "\n";
  }
  return out;
}

Isometry swap(std::size_t n, std::size_t i, std::size_t j) {
  TMatrix m = TMatrix::identity(n + 1);
  m(i, i) = m(j, j) = TowerElem(0);
  m(i, j) = m(j, i) = TowerElem(1);
  return Isometry(m, QuadForm::unit(n));
}

}  // namespace

int main() {
  criterion(1, "explicit matrices are isometries for n = 2..10", []() -> std::string {
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t n = 2; n <= 10; ++n) {
      const MatrixFile a = parse_matrix_text(padded_text("3+2*rt2", "4+2*rt2", "2+2*rt2", "1", n));
      const MatrixFile b =
          parse_matrix_text(padded_text("11/7+6/7*rt2", "4/7+6/7*rt2", "18/7+6/7*rt2", "3", n));
      if (!is_isometry(a.matrix, a.form) || !in_O_prime(a.matrix, a.form)) return fail("g1 at n = " + std::to_string(n));
      if (!is_isometry(b.matrix, b.form) || !in_O_prime(b.matrix, b.form)) return fail("g2 at n = " + std::to_string(n));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 1.0) return fail(fmt("took %.3f s", secs));
    return fmt("%.4f s", secs);
  });

  criterion(2, "eigenvalues, lengths and systole witness", []() -> std::string {
    // Frozen from the quadratic formula at 256 bits (see tests/oracles.hpp).
    const ABlockElement g1 = param_block(KElem(1), KElem(1));
    const ABlockElement g2 = param_block(KElem(3), k("3/2*rt2"));
    const double l1 = leading_eigenvalue(g1).numeric().midpoint();
    const double l2 = leading_eigenvalue(g2).numeric().midpoint();
    const double len1 = translation_length(g1).midpoint();
    const double len2 = translation_length(g2).midpoint();
    const double w = systole_witness(translation_length(g1), translation_length(g2)).midpoint();
    const struct {
      const char* name;
      double got, want, oracle, tol;
    } rows[] = {
        {"lambda1", l1, 11.5704270157665, oracle::larger_root(k("6+4*rt2"), KElem(1)), 1e-6},
        {"l1", len1, 2.44845244767808, std::log(oracle::larger_root(k("6+4*rt2"), KElem(1))), 1e-6},
        {"lambda2", l2, 5.38139792830988, oracle::larger_root(k("22/7+12/7*rt2"), KElem(1)), 1e-6},
        {"l2", len2, 1.68294817839747, std::log(oracle::larger_root(k("22/7+12/7*rt2"), KElem(1))), 1e-6},
        {"2(l1+l2)", w, 8.26280125215109, 0, 1e-5},
    };
    std::string detail;
    for (const auto& r : rows) {
      if (std::fabs(r.got - r.want) > r.tol) return fail(std::string(r.name) + fmt(" = %.12g", r.got));
      if (r.oracle != 0 && std::fabs(r.oracle - r.want) > 1e-12) return fail(std::string(r.name) + " oracle drift");
      detail += std::string(detail.empty() ? "" : ", ") + r.name + fmt(" = %.9f", r.got);
    }
    return detail;
  });

  criterion(3, "integrality verdicts", []() -> std::string {
    const QuadAlgNum l1 = leading_eigenvalue(param_block(KElem(1), KElem(1)));
    const QuadAlgNum l2 = leading_eigenvalue(param_block(KElem(3), k("3/2*rt2")));
    if (!is_algebraic_integer(l1)) return fail("lambda1 not integral");
    if (is_algebraic_integer(l2)) return fail("lambda2 integral");
    const AlgebraicReal p = product(l1, l2);
    if (is_algebraic_integer(p.minpoly)) return fail("lambda1*lambda2 integral");
    Integer lcm = 1;
    for (const auto& c : p.minpoly.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    if (lcm % 7 != 0) return fail("denominator " + lcm.get_str());
    return "product minpoly degree " + std::to_string(p.minpoly.degree()) + ", denominator lcm " + lcm.get_str();
  });

  criterion(4, "hyperplane distance matches alpha and translation length", []() -> std::string {
    int count = 0;
    for (int i = 0; i < 200; ++i) {
      const KElem c = i % 2 ? KElem(1) : KElem(3);
      KElem t;
      do t = oracle::small_kelem(30, 4); while (sign(t) <= 0 || sign(KElem::sqrt2() * t * t - c) <= 0);
      const ABlockElement g = param_block(c, t, 2 + static_cast<std::size_t>(i % 4));
      const GeodesicHyperplane h = GeodesicHyperplane::coordinate(g.form());
      const HyperplaneRelation rel = dist_hyperplanes(h, h.image(g.isometry()));
      if (rel.kind != HyperplaneRelation::Kind::disjoint) return fail("not disjoint for t = " + t.to_string());
      if (rel.cosh_squared != TowerElem(g.alpha() * g.alpha())) return fail("cosh^2 != alpha^2 for t = " + t.to_string());
      const RealInterval len = translation_length(g);
      if (!rel.value.overlaps(len) || std::fabs(rel.value.midpoint() - len.midpoint()) > std::ldexp(1.0, -40)) {
        return fail("distance differs from length for t = " + t.to_string());
      }
      ++count;
    }
    return std::to_string(count) + " blocks";
  });

  criterion(5, "small-element search and monotone lengths", []() -> std::string {
    std::string largest;
    for (int m = 1; m <= 20; ++m) {
      const SearchResult r = find_small_element(KElem(1), 1.0 / (4 * m), 10000);
      if (!r.t.is_rational() || r.t.rational_part().get_den() != 1 || r.t.rational_part() > 10000) {
        return fail("m = " + std::to_string(m) + " gave t = " + r.t.to_string());
      }
      if (!(r.length.upper() < 1.0 / (4 * m))) return fail("length above target at m = " + std::to_string(m));
      largest = r.t.to_string();
    }
    double previous = INFINITY;
    for (long t = 1; t <= 50; ++t) {
      const double len = translation_length(param_block(KElem(1), KElem(t))).midpoint();
      if (!(len < previous)) return fail("length not decreasing at t = " + std::to_string(t));
      previous = len;
    }
    return "t = " + largest + " at m = 20";
  });

  criterion(6, "trace fields and the non-quasi-arithmeticity certificate", []() -> std::string {
    const Isometry g1 = param_block(KElem(1), KElem(1)).isometry();
    const Isometry c2 = conjugate_between_forms(param_block(KElem(3), k("3/2*rt2")).isometry(), Rational(3));
    const FieldDescriptor sub = trace_field_sample(GroupSample({g1}, 4));
    if (sub.level != FieldLevel::k) return fail("<g1> level " + std::string(to_string(sub.level)));
    if (sub.witnesses.empty() || sub.witnesses[0].trace != TowerElem(k("7+4*rt2"))) return fail("witness");
    const FieldDescriptor mixed = trace_field_sample(GroupSample({g1, c2}, 2));
    if (mixed.level != FieldLevel::K) return fail("mixed level " + std::string(to_string(mixed.level)));
    const NonQaReport r = non_qa_certificate(Rational(3), sub, mixed);
    if (!r.pass) return fail("certificate broken at " + r.broken);
    return "K witness word " + to_string(mixed.witnesses.back().word);
  });

  criterion(7, "principal congruence membership and closure", []() -> std::string {
    const Isometry g1 = param_block(KElem(1), KElem(1)).isometry();
    const ZsqrtIdeal rt2 = ZsqrtIdeal::parse("rt2"), two = ZsqrtIdeal::parse("2"), seven = ZsqrtIdeal::parse("7");
    if (!in_principal_congruence(g1, rt2) || !in_principal_congruence(g1, two)) return fail("g1 not in level 2");
    if (in_principal_congruence(g1, seven)) return fail("g1 in level 7");
    const std::size_t n = 3;
    const Isometry a = param_block(KElem(1), KElem(1), n).isometry();
    std::vector<Isometry> gens;
    for (std::size_t i = 0; i < n; ++i) {
      const Isometry p = i == 0 ? Isometry::identity(QuadForm::unit(n)) : swap(n, 0, i);
      const Isometry b = p * a * p.inverse();
      gens.push_back(b);
      gens.push_back(b.inverse());
    }
    for (int trial = 0; trial < 50; ++trial) {
      Isometry m = Isometry::identity(QuadForm::unit(n));
      const long len = oracle::uniform(2, 5);
      for (long j = 0; j < len; ++j) m = m * gens[static_cast<std::size_t>(oracle::uniform(0, 5))];
      if (!in_principal_congruence(m, two) || !in_principal_congruence(m, rt2)) return fail("product left Gamma(2)");
    }
    return "50 products";
  });

  criterion(8, "Mahler minima and bounded enumeration", []() -> std::string {
    const MahlerMinimum m2 = min_mahler_above_one(2);
    if (std::fabs(m2.value - 1.618034) > 1e-5 || m2.witness != ZPoly{Integer(-1), Integer(-1), Integer(1)}) {
      return fail("D = 2 gave " + to_string(m2.witness));
    }
    const MahlerMinimum m4 = min_mahler_above_one(4);
    if (std::fabs(m4.value - 1.324718) > 1e-5 ||
        m4.witness != ZPoly{Integer(-1), Integer(-1), Integer(0), Integer(1)}) {
      return fail("D = 4 gave " + to_string(m4.witness));
    }
    const auto start = std::chrono::steady_clock::now();
    const auto polys = enumerate_bounded(4, 1.4);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60) return fail(fmt("enumeration took %.1f s", secs));
    return std::to_string(polys.size()) + " polynomials in " + fmt("%.2f s", secs);
  });

  criterion(9, "bracelets and the glued-geodesic inequality", []() -> std::string {
    for (std::size_t L = 2; L <= 12; L += 2) {
      const auto words = enumerate_balanced_bracelets(L);
      if (Integer(static_cast<unsigned long>(words.size())) != burnside_count(L) ||
          words.size() != oracle::bracelet_orbits(L).size()) {
        return fail("count mismatch at L = " + std::to_string(L));
      }
    }
    if (enumerate_balanced_bracelets(8).size() != 8) return fail("L = 8");
    const double eps4 = min_mahler_above_one(4).epsilon;
    for (unsigned m = 1; m <= 6; ++m) {
      const auto s = select_inequivalent(m);
      std::set<std::string> distinct;
      for (const auto& x : s) {
        if (!(canonical_form(x) == x)) return fail("non-canonical pattern");
        distinct.insert(x.word());
      }
      if (distinct.size() != m) return fail("m = " + std::to_string(m));
      const double eps = epsilon_budget(m, eps4);
      const double l1 = find_small_element(KElem(1), eps / 4, 100000000).length.upper();
      const double l2 = find_small_element(KElem(3), eps / 4, 100000000).length.upper();
      for (const auto& x : s) {
        if (!(glued_geodesic_length(x, l1, l2) < 1.0 / m)) return fail("glued length at m = " + std::to_string(m));
      }
    }
    return "L = 2..12, m = 1..6";
  });

  criterion(10, "similarity obstruction", []() -> std::string {
    for (long a : {3L, 17L}) {
      if (similarity_discriminant_obstruction(QuadForm::unit(3), QuadForm::with_first(KElem(a), 3)) !=
          Similarity::obstructed) {
        return fail("a = " + std::to_string(a) + " not obstructed");
      }
    }
    if (similarity_discriminant_obstruction(QuadForm::unit(3), QuadForm::unit(3)) != Similarity::inconclusive) {
      return fail("f vs f");
    }
    return "a = 3, 17 obstructed at n = 3";
  });

  return failures == 0 ? 0 : 1;
}
