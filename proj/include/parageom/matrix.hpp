#pragma once

#include "parageom/poly.hpp"
#include "parageom/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace parageom {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Scalar or Poly.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.c_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  /// Columns given as vectors.
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

  std::vector<T> row(std::size_t i) const { return {d_.begin() + i * c_, d_.begin() + (i + 1) * c_}; }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!(x == T(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < d_.size(); ++k) d_[k] += o.d_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < d_.size(); ++k) d_[k] -= o.d_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : d_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.d_) x = -x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix r(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < b.c_; ++j)
          if (!(b(k, j) == T(0))) r(i, j) += x * b(k, j);
      }
    return r;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != c_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> r(r_, T(0));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (!(v[j] == T(0)) && !((*this)(i, j) == T(0))) r[i] += (*this)(i, j) * v[j];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  T trace() const {
    T s(0);
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
    return s;
  }

  const std::vector<T>& data() const { return d_; }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix dimension mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> d_;
};

using QMatrix = Matrix<Scalar>;
using PMatrix = Matrix<Poly>;

/// Commutator ab - ba.
template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Kronecker product.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == T(0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

/// Throws std::domain_error ("parametric matrix") if an entry is non-constant.
QMatrix to_scalar(const PMatrix& m);
PMatrix to_poly(const QMatrix& m);
PMatrix substitute(const PMatrix& m, const std::map<std::string, Scalar>& values);
PMatrix substitute(const PMatrix& m, const std::map<std::string, Poly>& values);

Scalar dot(const Vector& a, const Vector& b);

std::string to_string(const QMatrix& m);

}  // namespace parageom
