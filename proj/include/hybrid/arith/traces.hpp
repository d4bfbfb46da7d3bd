#pragma once

#include <string>
#include <vector>

#include "hybrid/lorentz/form.hpp"
#include "hybrid/polyalg/algnum.hpp"

namespace hybrid {

/// ((tr M)^2 - tr(M^2)) / 2, the trace of M on the exterior square.
TowerElem adjoint_trace(const Isometry& m);

/**
 * D M D^-1 with D = diag(sqrt a, 1, ..., 1): carries an isometry of
 * diag(a, 1, ..., 1, -rt2) to one of diag(1, ..., 1, -rt2) with entries in
 * K = k(sqrt a). Throws std::invalid_argument if M is not an isometry of that
 * form or a is not admissible.
 */
Isometry conjugate_between_forms(const Isometry& m, const Rational& a);

/// A word in generators g_1..g_r: entry i means g_i, entry -i means g_i^-1.
using Word = std::vector<int>;

/// "1,-2"; the empty word is "e".
std::string to_string(const Word& w);

struct GroupSample {
  /// Throws std::invalid_argument if the generators use different forms or
  /// the list is empty.
  GroupSample(std::vector<Isometry> generators, unsigned word_length);

  std::vector<Isometry> generators;
  unsigned word_length;
};

/// Freely reduced words of length 1..max_length over r generators, by length
/// and then lexicographically in the letter order 1, -1, 2, -2, ...
std::vector<Word> reduced_words(std::size_t generators, unsigned max_length);

struct TraceRecord {
  Word word;
  TowerElem trace;
};

/// Adjoint traces of every reduced word of the sample, in reduced_words order.
std::vector<TraceRecord> sample_traces(const GroupSample& g);

enum class FieldLevel { Q, k, K };
const char* to_string(FieldLevel level);

struct FieldWitness {
  Word word;
  TowerElem trace;
  /// "rt2" or "rtA": the coordinate of the trace that is nonzero.
  std::string coordinate;
};

struct FieldDescriptor {
  FieldLevel level = FieldLevel::Q;
  std::vector<FieldWitness> witnesses;
};

/// Smallest of Q, k, K containing every sampled adjoint trace, with the first
/// word exhibiting each of sqrt 2 and sqrt a. Throws std::invalid_argument
/// when the word length is 0.
FieldDescriptor trace_field_sample(const GroupSample& g);

struct NonIntegralTrace {
  Word word;
  TowerElem trace;
  QPoly minpoly;
};

/// Sampled words whose adjoint trace is not an algebraic integer.
std::vector<NonIntegralTrace> integrality_scan(const GroupSample& g);

struct CertificateLink {
  std::string name;
  bool holds;
  std::string detail;
};

struct NonQaReport {
  bool pass = false;
  std::vector<CertificateLink> links;
  /// Name of the first failing link, empty on PASS.
  std::string broken;
  std::string caveat;
};

/**
 * PASS iff a is not a square in k, the subgroup sample has adjoint trace
 * field k and the ambient sample has K. Zariski density of the samples is
 * assumed, not checked; the report says so.
 */
NonQaReport non_qa_certificate(const Rational& a, const FieldDescriptor& subgroup, const FieldDescriptor& ambient);

struct TransferCheck {
  bool holds = false;
  bool mu_integral = false;
  bool nu_integral = false;
  QPoly mu_minpoly;
  QPoly nu_minpoly;
  /// nu = mu + 1/mu + (n - 1) as a root of a quadratic over k.
  KElem nu_trace;
  KElem nu_norm;
};

/// Checks that mu + 1/mu + (n - 1) is an algebraic integer exactly when mu
/// is. Throws std::domain_error unless mu > 1.
TransferCheck palindromic_transfer_check(const QuadAlgNum& mu, std::size_t n);

}  // namespace hybrid
