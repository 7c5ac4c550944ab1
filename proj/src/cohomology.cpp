#include "parageom/cohomology.hpp"

#include <stdexcept>

namespace parageom {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Vector Cochain::at(std::size_t i) const {
  return Vector(coeffs.begin() + static_cast<long>(i * vdim), coeffs.begin() + static_cast<long>((i + 1) * vdim));
}

Vector Cochain::at(std::size_t i, std::size_t j) const {
  Vector v(vdim);
  if (i == j) return v;
  std::size_t p = pair_index(i, j, hdim);
  for (std::size_t a = 0; a < vdim; ++a) v[a] = coeffs[p * vdim + a];
  if (i > j)
    for (auto& x : v) x = -x;
  return v;
}

namespace {

// Sign and index of the pair (i, j) with i != j.
std::pair<int, std::size_t> signed_pair(std::size_t i, std::size_t j, std::size_t n) {
  return {i < j ? 1 : -1, pair_index(i, j, n)};
}

}  // namespace

SparseMatrix ce_differential(const Representation& r, int k) {
  const LieAlgebra& h = r.algebra();
  const std::size_t n = h.dim(), d = r.dim();
  auto cc = [&](std::size_t i, std::size_t j, std::size_t m) { return h.c(i, j, m).constant_value(); };
  switch (k) {
    case 0: {
      SparseMatrix m(n * d, d);
      for (std::size_t i = 0; i < n; ++i) {
        const QMatrix& rho = r.scalar_action(i);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) m.add(i * d + a, b, rho(a, b));
      }
      m.finish();
      return m;
    }
    case 1: {
      const std::size_t pairs = n * (n - 1) / 2;
      SparseMatrix m(pairs * d, n * d);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const std::size_t row0 = pair_index(i, j, n) * d;
          const QMatrix& ri = r.scalar_action(i);
          const QMatrix& rj = r.scalar_action(j);
          for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
              m.add(row0 + a, j * d + b, ri(a, b));
              m.add(row0 + a, i * d + b, -rj(a, b));
            }
          for (std::size_t l = 0; l < n; ++l) {
            if (h.c(i, j, l).is_zero()) continue;
            Scalar s = cc(i, j, l);
            for (std::size_t a = 0; a < d; ++a) m.add(row0 + a, l * d + a, -s);
          }
        }
      m.finish();
      return m;
    }
    case 2: {
      const std::size_t pairs = n * (n - 1) / 2;
      const std::size_t triples = n * (n - 1) * (n - 2) / 6;
      SparseMatrix m(triples * d, pairs * d);
      std::size_t t = 0;
      for (std::size_t x0 = 0; x0 < n; ++x0)
        for (std::size_t x1 = x0 + 1; x1 < n; ++x1)
          for (std::size_t x2 = x1 + 1; x2 < n; ++x2, ++t) {
            const std::size_t row0 = t * d;
            // x0.psi(x1,x2) - x1.psi(x0,x2) + x2.psi(x0,x1)
            const std::size_t xs[3] = {x0, x1, x2};
            for (int s = 0; s < 3; ++s) {
              std::size_t u = xs[(s == 0) ? 1 : 0], w = xs[(s == 2) ? 1 : 2];
              int sign = (s % 2 == 0) ? 1 : -1;
              const QMatrix& rho = r.scalar_action(xs[s]);
              std::size_t col0 = pair_index(u, w, n) * d;
              for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) m.add(row0 + a, col0 + b, sign * rho(a, b));
            }
            // - psi([x0,x1],x2) + psi([x0,x2],x1) - psi([x1,x2],x0)
            struct Term {
              std::size_t p, q, other;
              int sign;
            };
            const Term terms[3] = {{x0, x1, x2, -1}, {x0, x2, x1, 1}, {x1, x2, x0, -1}};
            for (const auto& tm : terms)
              for (std::size_t l = 0; l < n; ++l) {
                if (h.c(tm.p, tm.q, l).is_zero() || l == tm.other) continue;
                auto [ps, pidx] = signed_pair(l, tm.other, n);
                Scalar s = cc(tm.p, tm.q, l) * tm.sign * ps;
                for (std::size_t a = 0; a < d; ++a) m.add(row0 + a, pidx * d + a, s);
              }
          }
      m.finish();
      return m;
    }
    default:
      throw std::invalid_argument("ce_differential: degree must be 0, 1 or 2");
  }
}

CohomologyResult ce_cohomology(const Representation& r, int k) {
  if (k != 1) throw std::invalid_argument("ce_cohomology: only degree 1 is supported");
  const std::size_t n = r.algebra().dim(), d = r.dim();
  SparseMatrix d0 = ce_differential(r, 0);
  SparseMatrix d1 = ce_differential(r, 1);
  // B^1 = column space of d0: rows of d0^T.
  Echelon eb(n * d);
  for (const auto& row : d0.transpose().data)
    if (!row.empty()) eb.insert(row);
  auto z = kernel(d1);
  CohomologyResult res;
  res.cocycles = z.size();
  res.coboundaries = eb.rank();
  res.dim = res.cocycles - res.coboundaries;
  Echelon reps(n * d);
  for (auto& v : z) {
    eb.reduce(v);
    reps.insert(v);
  }
  for (const auto& row : reps.rows()) {
    Cochain c{1, n, d, Vector(n * d)};
    for (const auto& [col, x] : row) c.coeffs[col] = x;
    res.representatives.push_back(std::move(c));
  }
  return res;
}

}  // namespace parageom
