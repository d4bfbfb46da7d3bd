#pragma once

#include <optional>
#include <string>

#include "hybrid/cli/certificate.hpp"
#include "hybrid/exactfield/kelem.hpp"

namespace hybrid::cli {

struct VerifyOptions {
  Rational a = 3;
  std::size_t n = 2;
  /// Conic parameter of g_2 on diag(a, 1, ..., 1, -rt2); defaults to (3/2) rt2
  /// when admissible for a, else the smallest admissible integer.
  std::optional<KElem> t2;
  unsigned word_length = 4;
  mpfr_prec_t precision = 128;
};

/// Longest words accepted by --word-length.
inline constexpr unsigned kMaxWordLength = 8;

/// Every check of the two-block construction, in pipeline order.
Certificate cmd_verify_paper(const VerifyOptions& options);

Certificate cmd_search(const KElem& c, double epsilon, unsigned long height_bound, std::size_t n,
                       mpfr_prec_t precision);

/// Smallest Mahler measure above 1 up to degree D; with a bound, also the
/// number of polynomials enumerated under it.
Certificate cmd_mahler(int max_degree, std::optional<double> bound);

/// Exactly one of length and m must be given.
Certificate cmd_bracelets(std::optional<std::size_t> length, std::optional<unsigned> m);

/// Membership of the matrix in the text file format in Gamma(level).
Certificate cmd_congruence(const std::string& matrix_text, const std::string& level);

Certificate cmd_minpoly(const KElem& trace, const KElem& norm, bool plus_branch, mpfr_prec_t precision);

/// epsilon = 2^-m min(1/m, eps(D)) and the glued-length inequality it buys.
Certificate cmd_budget(unsigned m, int max_degree, const Rational& a, mpfr_prec_t precision);

}  // namespace hybrid::cli
