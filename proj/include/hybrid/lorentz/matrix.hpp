#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hybrid {

/// Dense row-major matrix over an exact (or interval) scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  T trace() const {
    T acc(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
    return acc;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == T(0)) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  Matrix operator-() const {
    Matrix c = *this;
    for (auto& x : c.data_) x = -x;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    }
    return out;
  }

  template <class U, class F>
  Matrix<U> map(F&& f) const {
    Matrix<U> m(rows_, cols_, f((*this)(0, 0)));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
    }
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace hybrid
