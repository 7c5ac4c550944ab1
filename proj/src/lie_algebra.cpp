#include "parageom/lie_algebra.hpp"

#include "parageom/errors.hpp"

#include <random>
#include <set>
#include <sstream>

namespace parageom {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names) : names_(std::move(basis_names)) {
  const std::size_t n = names_.size();
  c_.assign(n * n * n, Poly());
}

std::size_t LieAlgebra::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("unknown basis element '" + name + "'");
}

LieAlgebra& LieAlgebra::set(std::size_t i, std::size_t j, const PVector& value) {
  if (value.size() != dim()) throw std::invalid_argument("bracket value has wrong length");
  if (i == j) {
    for (const auto& v : value)
      if (!v.is_zero()) throw std::invalid_argument("[x,x] must vanish");
    return *this;
  }
  for (std::size_t k = 0; k < dim(); ++k) {
    cref(i, j, k) = value[k];
    cref(j, i, k) = -value[k];
  }
  return *this;
}

LieAlgebra& LieAlgebra::set(const std::string& a, const std::string& b, const std::map<std::string, Poly>& value) {
  PVector v(dim());
  for (const auto& [name, coef] : value) v[index(name)] += coef;
  return set(index(a), index(b), v);
}

namespace {

Vector vec(const QMatrix& m) { return m.data(); }

}  // namespace

LieAlgebra LieAlgebra::from_matrices(std::vector<std::string> names, const std::vector<QMatrix>& mats) {
  if (names.size() != mats.size()) throw std::invalid_argument("from_matrices: names/matrices mismatch");
  const std::size_t k = mats.size();
  std::vector<Vector> cols;
  for (const auto& m : mats) cols.push_back(vec(m));
  const std::size_t len = cols.empty() ? 0 : cols[0].size();
  QMatrix a = QMatrix::from_columns(cols, len);
  if (rank(a) != k) throw std::invalid_argument("from_matrices: matrices are linearly dependent");
  LieAlgebra L(std::move(names));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto sol = solve_affine(a, vec(commutator(mats[i], mats[j])));
      if (!sol.feasible)
        throw std::invalid_argument("from_matrices: span not closed at [" + L.names_[i] + "," + L.names_[j] + "]");
      PVector v(sol.particular.begin(), sol.particular.end());
      L.set(i, j, v);
    }
  return L;
}

bool LieAlgebra::is_scalar() const {
  for (const auto& p : c_)
    if (!p.is_constant()) return false;
  return true;
}

std::vector<std::string> LieAlgebra::parameters() const {
  std::set<std::string> s;
  for (const auto& p : c_)
    for (const auto& v : p.variables()) s.insert(v);
  return {s.begin(), s.end()};
}

PVector LieAlgebra::bracket(const PVector& x, const PVector& y) const {
  const std::size_t n = dim();
  PVector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Poly xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero()) r[k] += xy * c(i, j, k);
    }
  }
  return r;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0 || i == j) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero()) r[k] += xy * c(i, j, k).constant_value();
    }
  }
  return r;
}

PMatrix LieAlgebra::ad(std::size_t i) const {
  PMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = c(i, j, k);
  return m;
}

QMatrix LieAlgebra::ad_scalar(std::size_t i) const { return to_scalar(ad(i)); }

QMatrix LieAlgebra::ad_scalar(const Vector& x) const {
  QMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(x[i]) != 0) m += ad_scalar(i) * x[i];
  return m;
}

LieAlgebra LieAlgebra::substitute(const std::map<std::string, Scalar>& values) const {
  LieAlgebra r = *this;
  for (auto& p : r.c_) p = p.substitute(values);
  return r;
}

LieAlgebra LieAlgebra::substitute(const std::map<std::string, Poly>& values) const {
  LieAlgebra r = *this;
  for (auto& p : r.c_) p = p.substitute(values);
  return r;
}

LieAlgebra LieAlgebra::change_basis(const QMatrix& p, std::vector<std::string> new_names) const {
  const std::size_t n = dim();
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("change_basis: wrong matrix size");
  if (new_names.empty()) new_names = names_;
  QMatrix pinv = inverse(p);
  PMatrix pinv_p = to_poly(pinv);
  LieAlgebra r(std::move(new_names));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      PVector fa(n), fb(n);
      for (std::size_t i = 0; i < n; ++i) {
        fa[i] = p(i, a);
        fb[i] = p(i, b);
      }
      r.set(a, b, pinv_p.apply(bracket(fa, fb)));
    }
  return r;
}

namespace {

std::string coef_prefix(const Poly& c) {
  if (c == Poly(1)) return "";
  if (c == Poly(-1)) return "-";
  if (c.is_constant()) return to_pretty(c.constant_value()) + "*";
  if (c.terms().size() == 1) return c.str() + "*";
  return "(" + c.str() + ")*";
}

}  // namespace

std::vector<std::string> LieAlgebra::bracket_table() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) {
      std::string rhs;
      for (std::size_t k = 0; k < dim(); ++k) {
        const Poly& v = c(i, j, k);
        if (v.is_zero()) continue;
        std::string t = coef_prefix(v) + names_[k];
        if (rhs.empty())
          rhs = t;
        else if (t[0] == '-')
          rhs += " - " + t.substr(1);
        else
          rhs += " + " + t;
      }
      if (!rhs.empty()) out.push_back("[" + names_[i] + "," + names_[j] + "] = " + rhs);
    }
  return out;
}

LieAlgebra Subalgebra::induced(std::vector<std::string> names) const {
  if (names.empty())
    for (std::size_t i = 0; i < span.size(); ++i) names.push_back("s" + std::to_string(i + 1));
  LieAlgebra r(std::move(names));
  for (std::size_t a = 0; a < span.size(); ++a)
    for (std::size_t b = a + 1; b < span.size(); ++b) {
      Vector co = coordinates(parent.bracket(span[a], span[b]));
      r.set(a, b, PVector(co.begin(), co.end()));
    }
  return r;
}

Vector Subalgebra::coordinates(const Vector& x) const {
  auto sol = solve_affine(QMatrix::from_columns(span, parent.dim()), x);
  if (!sol.feasible) throw std::invalid_argument("vector is outside the subalgebra span");
  return sol.particular;
}

bool Subalgebra::contains(const Vector& x) const {
  if (span.empty()) {
    for (const auto& v : x)
      if (sgn(v) != 0) return false;
    return true;
  }
  return solve_affine(QMatrix::from_columns(span, parent.dim()), x).feasible;
}

std::vector<JacobiResidual> jacobi_defect(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<JacobiResidual> out;
  auto unit = [n](std::size_t i) {
    PVector v(n);
    v[i] = 1;
    return v;
  };
  std::vector<PVector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        PVector a = L.bracket(e[i], L.bracket(e[j], e[k]));
        PVector b = L.bracket(e[j], L.bracket(e[k], e[i]));
        PVector c = L.bracket(e[k], L.bracket(e[i], e[j]));
        for (std::size_t t = 0; t < n; ++t) {
          Poly v = a[t] + b[t] + c[t];
          if (!v.is_zero()) out.push_back({i, j, k, t, std::move(v)});
        }
      }
  return out;
}

bool is_lie_algebra(const LieAlgebra& L) { return jacobi_defect(L).empty(); }

QMatrix killing_form(const LieAlgebra& L) {
  if (!L.is_scalar()) throw ParametricError("Killing form needs numeric structure constants");
  const std::size_t n = L.dim();
  std::vector<QMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad_scalar(i));
  QMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (sgn(ads[i](a, b)) != 0 && sgn(ads[j](b, a)) != 0) t += ads[i](a, b) * ads[j](b, a);
      k(i, j) = k(j, i) = t;
    }
  return k;
}

Scalar killing(const LieAlgebra& L, const Vector& x, const Vector& y) {
  return (L.ad_scalar(x) * L.ad_scalar(y)).trace();
}

bool is_subalgebra(const LieAlgebra& parent, const std::vector<Vector>& span) {
  if (span.empty()) return true;
  QMatrix a = QMatrix::from_columns(span, parent.dim());
  if (rank(a) != span.size()) throw std::invalid_argument("is_subalgebra: span is linearly dependent");
  Echelon e(parent.dim());
  for (const auto& v : span) e.insert(v);
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = i + 1; j < span.size(); ++j) {
      Vector b = parent.bracket(span[i], span[j]);
      if (!e.reduce(b)) return false;
    }
  return true;
}

Subalgebra make_subalgebra(const LieAlgebra& parent, std::vector<Vector> span) {
  if (!is_subalgebra(parent, span)) throw std::invalid_argument("span is not closed under the bracket");
  return {parent, std::move(span)};
}

Subalgebra centralizer(const LieAlgebra& L, const Vector& x) { return {L, kernel(L.ad_scalar(x))}; }

Subalgebra derived_subalgebra(const LieAlgebra& L) {
  if (!L.is_scalar()) throw ParametricError("derived algebra needs numeric structure constants");
  const std::size_t n = L.dim();
  Echelon e(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = L.c(i, j, k).constant_value();
      e.insert(v);
    }
  std::vector<Vector> span;
  for (const auto& row : e.rows()) {
    Vector v(n);
    for (const auto& [c, x] : row) v[c] = x;
    span.push_back(std::move(v));
  }
  return {L, std::move(span)};
}

Subalgebra radical(const LieAlgebra& L) {
  Subalgebra d = derived_subalgebra(L);
  QMatrix k = killing_form(L);
  const std::size_t n = L.dim();
  QMatrix rows(d.span.size(), n);
  for (std::size_t a = 0; a < d.span.size(); ++a) {
    Vector r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(d.span[a][i]) != 0) r[j] += d.span[a][i] * k(i, j);
    for (std::size_t j = 0; j < n; ++j) rows(a, j) = r[j];
  }
  return {L, kernel(rows)};
}

bool is_ideal(const LieAlgebra& L, const std::vector<Vector>& span) {
  Echelon e(L.dim());
  for (const auto& v : span) e.insert(v);
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Vector bi(L.dim());
    bi[i] = 1;
    for (const auto& s : span) {
      Vector b = L.bracket(bi, s);
      if (!e.reduce(b)) return false;
    }
  }
  return true;
}

std::size_t sampled_rank(const LieAlgebra& L, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::size_t best = L.dim();
  for (int s = 0; s < samples; ++s) {
    Vector x(L.dim());
    for (auto& v : x) v = frac(num(rng), den(rng));
    best = std::min(best, kernel(L.ad_scalar(x)).size());
  }
  return best;
}

Identification identify_simple(const LieAlgebra& L, std::uint64_t seed) {
  QMatrix k = killing_form(L);
  Identification id;
  id.dim = L.dim();
  id.signature = signature(k);
  if (id.signature.nullity != 0) throw PreconditionError("not semisimple: Killing form is degenerate");
  id.rank = sampled_rank(L, seed);
  auto sig = [&](std::size_t p, std::size_t q) { return id.signature.positive == p && id.signature.negative == q; };
  if (id.dim == 14 && id.rank == 2 && sig(8, 6)) {
    id.label = "g2_split";
  } else if (id.dim == 10 && id.rank == 2 && sig(6, 4)) {
    id.label = "sp4_R";
    id.note = "sp4_R/so23 class (locally isomorphic)";
  } else if (id.dim == 8 && id.rank == 2 && sig(5, 3)) {
    id.label = "sl3_R";
  } else {
    id.label = "other";
  }
  return id;
}

QMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

LieAlgebra sl2() {
  LieAlgebra L({"e", "f", "h"});
  L.set("h", "e", {{"e", 2}});
  L.set("h", "f", {{"f", -2}});
  L.set("e", "f", {{"h", 1}});
  return L;
}

LieAlgebra sl3() {
  std::vector<QMatrix> m{elementary(3, 1, 2), elementary(3, 1, 3), elementary(3, 2, 1), elementary(3, 2, 3),
                         elementary(3, 3, 1), elementary(3, 3, 2), elementary(3, 1, 1) - elementary(3, 2, 2),
                         elementary(3, 2, 2) - elementary(3, 3, 3)};
  return LieAlgebra::from_matrices({"E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"}, m);
}

LieAlgebra su2() {
  LieAlgebra L({"e1", "e2", "e3"});
  L.set("e1", "e2", {{"e3", 1}});
  L.set("e2", "e3", {{"e1", 1}});
  L.set("e3", "e1", {{"e2", 1}});
  return L;
}

}  // namespace parageom
