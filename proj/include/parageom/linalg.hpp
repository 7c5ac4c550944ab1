#pragma once

#include "parageom/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace parageom {

/// Sparse row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Reduced row echelon form, built incrementally one row at a time.
/// Pivot rows are monic and every pivot column is zero in all other rows.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols), work_(cols) {}

  /// Reduces v against the current rows; returns true if v was independent
  /// (and is now a new pivot row).
  bool insert(const Vector& v);
  bool insert(const SparseRow& v);
  /// Reduces v in place against the pivot rows; returns true if it becomes 0.
  bool reduce(Vector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  /// Rows sorted by pivot column.
  std::vector<SparseRow> rows() const;
  std::vector<std::size_t> pivots() const;
  /// Basis of the orthogonal complement of the row space (the null space of
  /// the inserted vectors viewed as rows), one vector per free column.
  std::vector<Vector> null_space() const;

 private:
  bool insert_work();
  std::size_t cols_;
  std::vector<std::pair<std::size_t, SparseRow>> rows_;  // (pivot, row), kept sorted
  Vector work_;
};

/// Row-sparse matrix, used for large differentials.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<SparseRow> data;  // one entry per row

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}
  /// Adds v to entry (i, j); rows must be finalized with `finish` before use.
  void add(std::size_t i, std::size_t j, const Scalar& v);
  /// Sorts rows, merges duplicates and drops zeros.
  void finish();
  Vector apply(const Vector& v) const;
  SparseMatrix transpose() const;
  QMatrix dense() const;
  static SparseMatrix from_dense(const QMatrix& m);
};
SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

std::size_t rank(const SparseMatrix& m);
std::vector<Vector> kernel(const SparseMatrix& m);

std::size_t rank(const QMatrix& m);
std::vector<Vector> kernel(const QMatrix& m);
std::vector<Vector> left_kernel(const QMatrix& m);
/// Basis of the column space in reduced form (rows of rref of the transpose).
std::vector<Vector> column_space_basis(const QMatrix& m);
std::pair<QMatrix, std::vector<std::size_t>> rref(const QMatrix& m);

struct AffineSolution {
  bool feasible = false;
  Vector particular;
  std::vector<Vector> homogeneous;
  /// When infeasible: y with y^T m = 0 and y . rhs != 0.
  Vector certificate;
};
AffineSolution solve_affine(const QMatrix& m, const Vector& rhs);

Scalar det(const QMatrix& m);
/// Throws std::domain_error when singular.
QMatrix inverse(const QMatrix& m);

struct Inertia {
  std::size_t positive = 0, negative = 0, nullity = 0;
  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.positive == b.positive && a.negative == b.negative && a.nullity == b.nullity;
  }
};
bool is_symmetric(const QMatrix& m);
/// Sylvester inertia by symmetric congruence elimination.
Inertia signature(const QMatrix& m);

/// Coefficients of x^0..x^n of det(x I - m).
std::vector<Scalar> charpoly(const QMatrix& m);

/// Poly determinant (cofactor expansion for small matrices, fraction-free
/// Bareiss otherwise).
Poly det(const PMatrix& m);

}  // namespace parageom
