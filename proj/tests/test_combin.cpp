#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <set>

#include "hybrid/combin/bracelets.hpp"
#include "hybrid/lorentz/block.hpp"

using namespace hybrid;

namespace {

std::vector<std::string> dihedral_images(const std::string& w) {
  std::vector<std::string> out;
  for (int flip = 0; flip < 2; ++flip) {
    std::string image = flip ? std::string(w.rbegin(), w.rend()) : w;
    for (std::size_t r = 0; r < w.size(); ++r) {
      out.push_back(image);
      image = image.substr(1) + image[0];
    }
  }
  return out;
}

std::string random_balanced(std::size_t L) {
  std::string w = std::string(L / 2, '1') + std::string(L / 2, '2');
  std::shuffle(w.begin(), w.end(), oracle::rng());
  return w;
}

}  // namespace

TEST_CASE("cyclic sequences") {
  const CyclicBinarySeq s("1212");
  CHECK(s.length() == 4);
  CHECK(s.count('1') == 2);
  CHECK(s.balanced());
  CHECK_FALSE(CyclicBinarySeq("112").balanced());
  CHECK_THROWS_AS(CyclicBinarySeq(""), std::invalid_argument);
  CHECK_THROWS_AS(CyclicBinarySeq("1302"), std::invalid_argument);
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(CyclicBinarySeq("2112")).word() == "1122");
  CHECK(canonical_form(CyclicBinarySeq("2121")).word() == "1212");
  // 112122 and its mirror 221211 -> 112122 are one bracelet.
  CHECK(canonical_form(CyclicBinarySeq("121122")) == canonical_form(CyclicBinarySeq("221211")));
  CHECK(is_canonical("1122"));
  CHECK_FALSE(is_canonical("2112"));
  for (int i = 0; i < 300; ++i) {
    const std::size_t L = 2 * static_cast<std::size_t>(oracle::uniform(1, 12));
    const std::string w = random_balanced(L);
    const CyclicBinarySeq c = canonical_form(CyclicBinarySeq(w));
    std::string best = w;
    for (const auto& image : dihedral_images(w)) {
      best = std::min(best, image);
      CHECK(canonical_form(CyclicBinarySeq(image)) == c);
    }
    CHECK(c.word() == best);
    CHECK(is_canonical(c.word()));
    CHECK(is_canonical(w) == (w == best));
  }
}

TEST_CASE("bracelet counts") {
  // Balanced binary bracelets of length 2, 4, ..., 20.
  const std::vector<long> known{1, 2, 3, 8, 16, 50, 133, 440, 1387, 4752};
  for (std::size_t i = 0; i < known.size(); ++i) CHECK(burnside_count(2 * (i + 1)) == known[i]);
  for (std::size_t L = 2; L <= 16; L += 2) {
    const auto words = enumerate_balanced_bracelets(L);
    const auto orbits = oracle::bracelet_orbits(L);
    REQUIRE(words.size() == orbits.size());
    CHECK(burnside_count(L) == static_cast<long>(orbits.size()));
    std::size_t j = 0;
    for (const auto& rep : orbits) CHECK(words[j++].word() == rep);
  }
  CHECK(enumerate_balanced_bracelets(8).size() == 8);
  CHECK(enumerate_balanced_bracelets(20).size() == 4752);
  CHECK_THROWS_AS(enumerate_balanced_bracelets(7), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_balanced_bracelets(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_balanced_bracelets(kMaxEnumerationLength + 2), std::invalid_argument);
  CHECK_THROWS_AS(burnside_count(5), std::invalid_argument);
  // Far more bracelets than needed at every selection size.
  for (unsigned m = 1; m <= 12; ++m) CHECK(burnside_count(std::size_t{1} << m) >= m);
  CHECK(burnside_count(64) > Integer("100000000000000"));
}

TEST_CASE("selecting inequivalent patterns") {
  for (unsigned m = 1; m <= 8; ++m) {
    const auto s = select_inequivalent(m);
    REQUIRE(s.size() == m);
    std::set<std::string> distinct;
    for (const auto& x : s) {
      CHECK(x.length() == std::size_t{1} << m);
      CHECK(x.balanced());
      CHECK(canonical_form(x) == x);
      distinct.insert(x.word());
    }
    CHECK(distinct.size() == m);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] < s[i]);
  }
  // The selection is the lexicographic prefix of the full enumeration.
  const auto all = enumerate_balanced_bracelets(16);
  const auto four = select_inequivalent(4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(four[i] == all[i]);
  CHECK(select_inequivalent(12).size() == 12);
  CHECK_THROWS_AS(select_inequivalent(0), std::invalid_argument);
  CHECK_THROWS_AS(select_inequivalent(13), std::invalid_argument);
}

TEST_CASE("glued lengths and budgets") {
  CHECK(glued_geodesic_length(CyclicBinarySeq("12"), 0.5, 0.25) == doctest::Approx(1.5));
  CHECK(glued_geodesic_length(CyclicBinarySeq("1122"), 0.1, 0.2) == doctest::Approx(1.2));
  CHECK_THROWS_AS(glued_geodesic_length(CyclicBinarySeq("12"), 0, 1), std::invalid_argument);
  CHECK(hybrid_systole_lower_bound(1.0, 3.0) == 1.0);
  CHECK(hybrid_systole_lower_bound(2.0, 0.5) == 0.5);
  CHECK_THROWS_AS(hybrid_systole_lower_bound(-1, 1), std::invalid_argument);
  CHECK(epsilon_budget(1, 0.5) == 0.25);
  CHECK(epsilon_budget(3, 0.281199574323) == doctest::Approx(0.0351499467904));
  CHECK(epsilon_budget(3, 0.1) == doctest::Approx(0.0125));
  CHECK(epsilon_budget(10, 1.0) == std::ldexp(0.1, -10));
  CHECK_THROWS_AS(epsilon_budget(0, 1), std::invalid_argument);
  for (int i = 0; i < 200; ++i) {
    const std::size_t L = 2 * static_cast<std::size_t>(oracle::uniform(1, 10));
    const CyclicBinarySeq s(random_balanced(L));
    const double l1 = oracle::uniform(1, 1000) / 997.0, l2 = oracle::uniform(1, 1000) / 991.0;
    CHECK(glued_geodesic_length(s, l1, l2) == doctest::Approx(static_cast<double>(L) * (l1 + l2)));
  }
}

TEST_CASE("glued geodesics fit under the budget") {
  const double eps_d = 0.281199574323;  // log of the degree-4 Mahler minimum
  for (unsigned m = 1; m <= 6; ++m) {
    const double eps = epsilon_budget(m, eps_d);
    const double l1 = find_small_element(KElem(1), eps / 4, 100000000).length.upper();
    const double l2 = find_small_element(KElem(3), eps / 4, 100000000).length.upper();
    double longest = 0;
    for (const auto& s : select_inequivalent(m)) longest = std::max(longest, glued_geodesic_length(s, l1, l2));
    CHECK(longest < std::ldexp(eps / 2, static_cast<int>(m)));
    CHECK(std::ldexp(eps / 2, static_cast<int>(m)) < 1.0 / m);
  }
}
