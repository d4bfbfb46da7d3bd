#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hybrid/exactfield/tower.hpp"
#include "hybrid/lorentz/matrix.hpp"

namespace hybrid {

using KMatrix = Matrix<KElem>;
using TMatrix = Matrix<TowerElem>;

/// Diagonal form c_1 x_1^2 + ... + c_n x_n^2 - sqrt(2) x_(n+1)^2 with every c_i > 0.
class QuadForm {
 public:
  /// Throws std::invalid_argument unless every spatial coefficient is positive.
  explicit QuadForm(std::vector<KElem> spatial);

  /// diag(c, 1, ..., 1, -rt2) in n + 1 variables.
  static QuadForm with_first(const KElem& c, std::size_t n);
  static QuadForm unit(std::size_t n) { return with_first(KElem(1), n); }

  std::size_t n() const { return spatial_.size(); }
  std::size_t size() const { return spatial_.size() + 1; }
  const std::vector<KElem>& spatial() const { return spatial_; }
  static KElem temporal() { return -KElem::sqrt2(); }
  /// Diagonal entry i, with i = n the temporal coefficient.
  KElem coefficient(std::size_t i) const { return i < spatial_.size() ? spatial_[i] : temporal(); }

  template <class T>
  T evaluate(const std::vector<T>& x) const {
    return pairing(x, x);
  }
  template <class T>
  T pairing(const std::vector<T>& x, const std::vector<T>& y) const {
    T acc(0);
    for (std::size_t i = 0; i < size(); ++i) acc += T(coefficient(i)) * x[i] * y[i];
    return acc;
  }

  /// "diag(c1, ..., cn, -rt2)"
  std::string to_string() const;
  static QuadForm parse(std::string_view text);

  friend bool operator==(const QuadForm& a, const QuadForm& b) { return a.spatial_ == b.spatial_; }
  friend bool operator!=(const QuadForm& a, const QuadForm& b) { return !(a == b); }

 private:
  std::vector<KElem> spatial_;
};

TMatrix lift(const KMatrix& m);

/// Exact check M^T F M = F. Throws std::invalid_argument on a dimension mismatch.
bool is_isometry(const TMatrix& m, const QuadForm& form);
bool is_isometry(const KMatrix& m, const QuadForm& form);

/// True iff the bottom-right entry is positive, i.e. M preserves the upper
/// sheet. Throws std::domain_error if M is not an isometry of the form.
bool in_O_prime(const TMatrix& m, const QuadForm& form);

/// An exactly verified element of O(f) with entries in K.
class Isometry {
 public:
  /// Throws std::domain_error unless m preserves the form.
  Isometry(TMatrix m, QuadForm form);

  const TMatrix& matrix() const { return m_; }
  const QuadForm& form() const { return form_; }
  std::size_t size() const { return m_.rows(); }
  bool sheet_preserving() const;

  /// F^-1 M^T F.
  Isometry inverse() const;
  friend Isometry operator*(const Isometry& a, const Isometry& b);
  friend bool operator==(const Isometry& a, const Isometry& b) { return a.m_ == b.m_ && a.form_ == b.form_; }

  static Isometry identity(const QuadForm& form);

 private:
  TMatrix m_;
  QuadForm form_;
};

/// Parsed matrix file: a "form:" header, an optional "field: a=<rational>"
/// header and one comma-separated row per line.
struct MatrixFile {
  QuadForm form;
  FieldPtr field;
  TMatrix matrix;
};

MatrixFile parse_matrix_text(std::string_view text);
std::string to_text(const TMatrix& m, const QuadForm& form, const FieldPtr& field = nullptr);

}  // namespace hybrid
