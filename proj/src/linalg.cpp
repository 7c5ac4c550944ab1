#include "parageom/linalg.hpp"

#include "parageom/errors.hpp"

#include <algorithm>

namespace parageom {

namespace {

// a -= f * b for sparse rows.
void axpy(SparseRow& a, const Scalar& f, const SparseRow& b) {
  SparseRow r;
  r.reserve(a.size() + b.size());
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && x->first < y->first)) {
      r.push_back(std::move(*x++));
    } else if (x == a.end() || y->first < x->first) {
      r.emplace_back(y->first, -f * y->second);
      ++y;
    } else {
      Scalar v = x->second - f * y->second;
      if (sgn(v) != 0) r.emplace_back(x->first, std::move(v));
      ++x;
      ++y;
    }
  }
  a = std::move(r);
}

const Scalar* find_entry(const SparseRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) return &it->second;
  return nullptr;
}

}  // namespace

bool Echelon::insert(const Vector& v) {
  if (v.size() != cols_) throw std::invalid_argument("echelon: vector length mismatch");
  for (std::size_t i = 0; i < cols_; ++i) work_[i] = v[i];
  return insert_work();
}

bool Echelon::insert(const SparseRow& v) {
  for (auto& x : work_) x = 0;
  for (const auto& [c, x] : v) work_[c] = x;
  return insert_work();
}

bool Echelon::reduce(Vector& v) const {
  for (const auto& [p, row] : rows_) {
    if (sgn(v[p]) == 0) continue;
    Scalar f = v[p];
    for (const auto& [c, x] : row) v[c] -= f * x;
  }
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool Echelon::insert_work() {
  for (const auto& [p, row] : rows_) {
    if (sgn(work_[p]) == 0) continue;
    Scalar f = work_[p];
    for (const auto& [c, x] : row) work_[c] -= f * x;
  }
  std::size_t lead = cols_;
  for (std::size_t i = 0; i < cols_; ++i)
    if (sgn(work_[i]) != 0) {
      lead = i;
      break;
    }
  if (lead == cols_) return false;
  Scalar inv = 1 / work_[lead];
  SparseRow row;
  for (std::size_t i = lead; i < cols_; ++i)
    if (sgn(work_[i]) != 0) {
      row.emplace_back(i, work_[i] * inv);
      work_[i] = 0;
    }
  for (auto& [p, other] : rows_) {
    const Scalar* e = find_entry(other, lead);
    if (e) {
      Scalar f = *e;
      axpy(other, f, row);
    }
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), lead, [](const auto& e, std::size_t c) { return e.first < c; });
  rows_.insert(pos, {lead, std::move(row)});
  return true;
}

std::vector<SparseRow> Echelon::rows() const {
  std::vector<SparseRow> r;
  for (const auto& e : rows_) r.push_back(e.second);
  return r;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> r;
  for (const auto& e : rows_) r.push_back(e.first);
  return r;
}

std::vector<Vector> Echelon::null_space() const {
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& e : rows_) is_pivot[e.first] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols_);
    v[f] = 1;
    for (const auto& [p, row] : rows_) {
      const Scalar* e = find_entry(row, f);
      if (e) v[p] = -*e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

Echelon echelon_of_rows(const QMatrix& m) {
  Echelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow r;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) r.emplace_back(j, m(i, j));
    if (!r.empty()) e.insert(r);
  }
  return e;
}

}  // namespace

void SparseMatrix::add(std::size_t i, std::size_t j, const Scalar& v) {
  if (sgn(v) != 0) data[i].emplace_back(j, v);
}

void SparseMatrix::finish() {
  for (auto& row : data) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow merged;
    for (auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
    }
    row.clear();
    for (auto& e : merged)
      if (sgn(e.second) != 0) row.push_back(std::move(e));
  }
}

Vector SparseMatrix::apply(const Vector& v) const {
  Vector r(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& [c, x] : data[i])
      if (sgn(v[c]) != 0) r[i] += x * v[c];
  return r;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& [c, x] : data[i]) t.data[c].emplace_back(i, x);
  return t;
}

QMatrix SparseMatrix::dense() const {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& [c, x] : data[i]) m(i, c) = x;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const QMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.add(i, j, m(i, j));
  return s;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("sparse product dimension mismatch");
  SparseMatrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (const auto& [k, x] : a.data[i])
      for (const auto& [j, y] : b.data[k]) r.data[i].emplace_back(j, x * y);
  r.finish();
  return r;
}

namespace {

Echelon echelon_of_rows(const SparseMatrix& m) {
  Echelon e(m.cols);
  for (const auto& row : m.data)
    if (!row.empty()) e.insert(row);
  return e;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  // Eliminating along the shorter side keeps the working vector small.
  if (m.rows < m.cols) return echelon_of_rows(m.transpose()).rank();
  return echelon_of_rows(m).rank();
}

std::vector<Vector> kernel(const SparseMatrix& m) { return echelon_of_rows(m).null_space(); }

std::size_t rank(const QMatrix& m) { return echelon_of_rows(m).rank(); }

std::vector<Vector> kernel(const QMatrix& m) { return echelon_of_rows(m).null_space(); }

std::vector<Vector> left_kernel(const QMatrix& m) { return kernel(m.transpose()); }

std::vector<Vector> column_space_basis(const QMatrix& m) {
  Echelon e = echelon_of_rows(m.transpose());
  std::vector<Vector> out;
  for (const auto& row : e.rows()) {
    Vector v(m.rows());
    for (const auto& [c, x] : row) v[c] = x;
    out.push_back(std::move(v));
  }
  return out;
}

std::pair<QMatrix, std::vector<std::size_t>> rref(const QMatrix& m) {
  Echelon e = echelon_of_rows(m);
  QMatrix r(m.rows(), m.cols());
  auto rows = e.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, x] : rows[i]) r(i, c) = x;
  return {r, e.pivots()};
}

AffineSolution solve_affine(const QMatrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_affine: rhs length mismatch");
  const std::size_t n = m.cols();
  Echelon e(n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow r;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(m(i, j)) != 0) r.emplace_back(j, m(i, j));
    if (sgn(rhs[i]) != 0) r.emplace_back(n, rhs[i]);
    if (!r.empty()) e.insert(r);
  }
  AffineSolution s;
  auto piv = e.pivots();
  if (!piv.empty() && piv.back() == n) {
    s.feasible = false;
    for (auto& y : left_kernel(m)) {
      if (sgn(dot(y, rhs)) != 0) {
        s.certificate = std::move(y);
        break;
      }
    }
    return s;
  }
  s.feasible = true;
  s.particular.assign(n, 0);
  auto rows = e.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Scalar* last = find_entry(rows[i], n);
    if (last) s.particular[piv[i]] = *last;
  }
  for (auto& v : e.null_space()) {
    if (sgn(v[n]) != 0) continue;
    v.pop_back();
    s.homogeneous.push_back(std::move(v));
  }
  return s;
}

Scalar det(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Scalar d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      Scalar f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, piv] = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

bool is_symmetric(const QMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

Inertia signature(const QMatrix& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("signature: matrix is not symmetric");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Inertia res;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (sgn(a(i, i)) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // No diagonal pivot: combine two indices with a nonzero off-diagonal entry.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        res.nullity += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    swap_index(p, k);
    const Scalar piv = a(k, k);
    (sgn(piv) > 0 ? res.positive : res.negative)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      Scalar f = a(i, k) / piv;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
  }
  return res;
}

std::vector<Scalar> charpoly(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("charpoly: matrix not square");
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / Scalar(static_cast<long>(k));
  }
  return c;
}

namespace {

Poly det_rec(const PMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.rows()) return Poly(1);
  Poly s;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::size_t c = cols[k];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<long>(k));
      Poly minor = det_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(k), c);
      if (sign > 0)
        s += m(row, c) * minor;
      else
        s -= m(row, c) * minor;
    }
    sign = -sign;
  }
  return s;
}

}  // namespace

Poly det(const PMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_rec(m, cols, 0);
}

}  // namespace parageom
