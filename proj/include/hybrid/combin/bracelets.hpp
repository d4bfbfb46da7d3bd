#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hybrid/exactfield/rational.hpp"

namespace hybrid {

/// Cyclic word over {1, 2}, read as a gluing pattern of the two pieces.
class CyclicBinarySeq {
 public:
  /// Throws std::invalid_argument on an empty word or letters other than 1, 2.
  explicit CyclicBinarySeq(std::string word);

  const std::string& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  std::size_t count(char letter) const;
  bool balanced() const { return 2 * count('1') == length(); }

  friend bool operator==(const CyclicBinarySeq& x, const CyclicBinarySeq& y) { return x.word_ == y.word_; }
  friend bool operator<(const CyclicBinarySeq& x, const CyclicBinarySeq& y) { return x.word_ < y.word_; }

 private:
  std::string word_;
};

/// Lexicographic minimum over the 2L rotations and reflections.
CyclicBinarySeq canonical_form(const CyclicBinarySeq& s);
bool is_canonical(std::string_view word);

/// Largest L accepted by enumerate_balanced_bracelets.
inline constexpr std::size_t kMaxEnumerationLength = 20;

/// Canonical balanced words of even length L in lexicographic order. Throws
/// std::invalid_argument for odd, zero or too large L.
std::vector<CyclicBinarySeq> enumerate_balanced_bracelets(std::size_t L);

/// Number of balanced bracelets of even length L by Burnside's lemma over the
/// dihedral group of order 2L.
Integer burnside_count(std::size_t L);

/// The first m canonical balanced words of length 2^m in lexicographic order.
/// Throws std::invalid_argument for m outside 1..12.
std::vector<CyclicBinarySeq> select_inequivalent(unsigned m);

/// Sum over letters of 2 l_(s_j).
double glued_geodesic_length(const CyclicBinarySeq& s, double l1, double l2);

/// min(s1, s2, (s1 + s2)/2): geodesics inside one piece or crossing both.
double hybrid_systole_lower_bound(double s1, double s2);

/// 2^-m min(1/m, eps).
double epsilon_budget(unsigned m, double eps);

}  // namespace hybrid
