#include "hybrid/combin/bracelets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hybrid {
namespace {

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

void require_even(std::size_t L) {
  if (L == 0 || L % 2 != 0) throw std::invalid_argument("balanced words need a positive even length");
}

}  // namespace

CyclicBinarySeq::CyclicBinarySeq(std::string word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("cyclic sequence must be nonempty");
  if (word_.find_first_not_of("12") != std::string::npos) {
    throw std::invalid_argument("cyclic sequence '" + word_ + "' has letters other than 1 and 2");
  }
}

std::size_t CyclicBinarySeq::count(char letter) const {
  return static_cast<std::size_t>(std::count(word_.begin(), word_.end(), letter));
}

bool is_canonical(std::string_view word) {
  const std::size_t n = word.size();
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t r = 0; r < n; ++r) {
      // Image letter i: rotation word[(r + i) % n], reflection word[(r + n - i) % n].
      for (std::size_t i = 0; i < n; ++i) {
        const char c = reflect ? word[(r + n - i) % n] : word[(r + i) % n];
        if (c < word[i]) return false;
        if (c > word[i]) break;
      }
    }
  }
  return true;
}

CyclicBinarySeq canonical_form(const CyclicBinarySeq& s) {
  std::string best = s.word();
  std::string rev(s.word().rbegin(), s.word().rend());
  for (const std::string& base : {s.word(), rev}) {
    std::string image = base;
    for (std::size_t r = 0; r < base.size(); ++r) {
      std::rotate(image.begin(), image.begin() + 1, image.end());
      best = std::min(best, image);
    }
  }
  return CyclicBinarySeq(best);
}

std::vector<CyclicBinarySeq> enumerate_balanced_bracelets(std::size_t L) {
  require_even(L);
  if (L > kMaxEnumerationLength) {
    throw std::invalid_argument("bracelet enumeration is limited to L <= " + std::to_string(kMaxEnumerationLength));
  }
  std::string w = std::string(L / 2, '1') + std::string(L / 2, '2');
  std::vector<CyclicBinarySeq> out;
  do {
    if (is_canonical(w)) out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Integer burnside_count(std::size_t L) {
  require_even(L);
  const unsigned long n = L;
  const unsigned long half = n / 2;
  Integer fixed = 0;
  // Rotation by r has gcd(r, L) cycles of length L / gcd; balanced fixed words
  // need an even number d of cycles, half of them filled with 1.
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d == 0 && d % 2 == 0) fixed += euler_phi(n / d) * binomial(d, d / 2);
  }
  // L/2 axes through two letters: two fixed positions and (L-2)/2 swapped pairs.
  const unsigned long pairs = (n - 2) / 2;
  Integer vertex = 0;
  if (half % 2 == 0) {
    vertex = binomial(pairs, half / 2) + (half >= 2 ? binomial(pairs, half / 2 - 1) : Integer(0));
  } else {
    vertex = 2 * binomial(pairs, (half - 1) / 2);
  }
  // L/2 axes between letters: L/2 swapped pairs.
  const Integer edge = half % 2 == 0 ? binomial(half, half / 2) : Integer(0);
  fixed += half * (vertex + edge);
  Integer count = fixed / (2 * n);
  if (count * (2 * n) != fixed) throw std::logic_error("Burnside sum is not divisible by the group order");
  return count;
}

std::vector<CyclicBinarySeq> select_inequivalent(unsigned m) {
  if (m < 1 || m > 12) throw std::invalid_argument("select_inequivalent supports 1 <= m <= 12");
  const std::size_t L = std::size_t{1} << m;
  if (burnside_count(L) < m) throw std::logic_error("fewer than m balanced bracelets of length 2^m");
  std::string w = std::string(L / 2, '1') + std::string(L / 2, '2');
  std::vector<CyclicBinarySeq> out;
  do {
    if (is_canonical(w)) out.emplace_back(w);
  } while (out.size() < m && std::next_permutation(w.begin(), w.end()));
  if (out.size() < m) throw std::logic_error("ran out of balanced words before finding m bracelets");
  return out;
}

double glued_geodesic_length(const CyclicBinarySeq& s, double l1, double l2) {
  if (!(l1 > 0) || !(l2 > 0)) throw std::invalid_argument("piece lengths must be positive");
  double total = 0;
  for (char c : s.word()) total += 2 * (c == '1' ? l1 : l2);
  return total;
}

double hybrid_systole_lower_bound(double s1, double s2) {
  if (!(s1 > 0) || !(s2 > 0)) throw std::invalid_argument("systoles must be positive");
  return std::min({s1, s2, (s1 + s2) / 2});
}

double epsilon_budget(unsigned m, double eps) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (!(eps > 0)) throw std::invalid_argument("epsilon must be positive");
  return std::ldexp(std::min(1.0 / m, eps), -static_cast<int>(m));
}

}  // namespace hybrid
