#include "parageom/representation.hpp"

#include "parageom/errors.hpp"
#include "parageom/groebner.hpp"

#include <algorithm>
#include <map>

namespace parageom {

namespace {

bool all_scalar(const std::vector<PMatrix>& act) {
  for (const auto& m : act)
    for (const auto& x : m.data())
      if (!x.is_constant()) return false;
  return true;
}

}  // namespace

Representation::Representation(AlgebraPtr algebra, std::vector<PMatrix> action)
    : Representation(unchecked(std::move(algebra), std::move(action))) {
  auto defect = homomorphism_defect();
  if (!defect.empty()) throw std::invalid_argument("not a representation: " + defect.front());
}

Representation::Representation(AlgebraPtr algebra, const std::vector<QMatrix>& action) {
  std::vector<PMatrix> p;
  for (const auto& m : action) p.push_back(to_poly(m));
  *this = Representation(std::move(algebra), std::move(p));
}

Representation Representation::unchecked(AlgebraPtr algebra, std::vector<PMatrix> action) {
  if (!algebra) throw std::invalid_argument("representation without algebra");
  if (action.size() != algebra->dim()) throw std::invalid_argument("one action matrix per basis element is required");
  Representation r;
  r.alg_ = std::move(algebra);
  r.dim_ = action.empty() ? 0 : action[0].rows();
  for (const auto& m : action)
    if (m.rows() != r.dim_ || m.cols() != r.dim_) throw std::invalid_argument("action matrices must be square of equal size");
  r.scalar_ = all_scalar(action);
  if (r.scalar_)
    for (const auto& m : action) r.qact_.push_back(to_scalar(m));
  r.act_ = std::move(action);
  return r;
}

const QMatrix& Representation::scalar_action(std::size_t i) const {
  if (!scalar_) throw ParametricError("representation has symbolic entries");
  return qact_[i];
}

QMatrix Representation::scalar_action(const Vector& x) const {
  QMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) m += scalar_action(i) * x[i];
  return m;
}

std::vector<std::string> Representation::homomorphism_defect() const {
  std::vector<std::string> out;
  const LieAlgebra& L = *alg_;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      PMatrix lhs(dim_, dim_);
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (!L.c(i, j, k).is_zero()) lhs += act_[k] * L.c(i, j, k);
      PMatrix diff = lhs - commutator(act_[i], act_[j]);
      for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
          if (!diff(a, b).is_zero())
            out.push_back("[" + L.names()[i] + "," + L.names()[j] + "] entry (" + std::to_string(a) + "," +
                          std::to_string(b) + ") = " + diff(a, b).str());
    }
  return out;
}

Representation Representation::substitute(const std::map<std::string, Scalar>& values) const {
  std::vector<PMatrix> act;
  for (const auto& m : act_) act.push_back(parageom::substitute(m, values));
  return unchecked(share(alg_->substitute(values)), std::move(act));
}

AlgebraPtr share(LieAlgebra L) { return std::make_shared<const LieAlgebra>(std::move(L)); }

Representation trivial(const AlgebraPtr& alg, std::size_t n) {
  return Representation::unchecked(alg, std::vector<PMatrix>(alg->dim(), PMatrix(n, n)));
}

Representation adjoint(const AlgebraPtr& alg) {
  std::vector<PMatrix> act;
  for (std::size_t i = 0; i < alg->dim(); ++i) act.push_back(alg->ad(i));
  return Representation::unchecked(alg, std::move(act));
}

namespace {

void check_same_algebra(const Representation& a, const Representation& b) {
  if (a.algebra_ptr() != b.algebra_ptr() && !(a.algebra() == b.algebra()))
    throw std::invalid_argument("representations of different algebras");
}

template <class F>
Representation map_actions(const Representation& r, F f) {
  std::vector<PMatrix> act;
  for (std::size_t i = 0; i < r.algebra().dim(); ++i) act.push_back(f(i));
  return Representation::unchecked(r.algebra_ptr(), std::move(act));
}

// Tensor-type functors evaluated on numeric matrices when possible.
template <class T>
Matrix<T> kron_sum(const Matrix<T>& a, const Matrix<T>& b) {
  return kron(a, Matrix<T>::identity(b.rows())) + kron(Matrix<T>::identity(a.rows()), b);
}

template <class T>
Matrix<T> hom_action(const Matrix<T>& a, const Matrix<T>& b) {
  return kron(b, Matrix<T>::identity(a.rows())) - kron(Matrix<T>::identity(b.rows()), a.transpose());
}

template <class T>
Matrix<T> exterior_action(const Matrix<T>& m, const std::vector<std::vector<std::size_t>>& basis,
                          const std::map<std::vector<std::size_t>, std::size_t>& idx) {
  Matrix<T> r(basis.size(), basis.size());
  const std::size_t n = m.rows();
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const auto& S = basis[s];
    for (std::size_t pos = 0; pos < S.size(); ++pos)
      for (std::size_t k = 0; k < n; ++k) {
        const T& x = m(k, S[pos]);
        if (x == T(0)) continue;
        auto tup = S;
        tup[pos] = k;
        bool dup = false;
        for (std::size_t q = 0; q < tup.size(); ++q)
          if (q != pos && tup[q] == k) dup = true;
        if (dup) continue;
        // Sort with sign (bubble: p <= 3 in practice).
        int sign = 1;
        for (std::size_t a = 0; a < tup.size(); ++a)
          for (std::size_t b = 0; b + 1 < tup.size() - a; ++b)
            if (tup[b] > tup[b + 1]) {
              std::swap(tup[b], tup[b + 1]);
              sign = -sign;
            }
        std::size_t t = idx.at(tup);
        if (sign > 0)
          r(t, s) += x;
        else
          r(t, s) -= x;
      }
  }
  return r;
}

template <class T>
Matrix<T> sym2_action(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) idx[{i, j}] = idx.size();
  auto key = [](std::size_t a, std::size_t b) { return a <= b ? std::make_pair(a, b) : std::make_pair(b, a); };
  Matrix<T> r(idx.size(), idx.size());
  for (const auto& [ij, s] : idx) {
    auto [i, j] = ij;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(m(k, i) == T(0))) r(idx.at(key(k, j)), s) += m(k, i);
      if (!(m(k, j) == T(0))) r(idx.at(key(i, k)), s) += m(k, j);
    }
  }
  return r;
}

}  // namespace

Representation dual(const Representation& r) {
  return map_actions(r, [&](std::size_t i) { return -r.action(i).transpose(); });
}

Representation tensor(const Representation& a, const Representation& b) {
  check_same_algebra(a, b);
  return map_actions(a, [&](std::size_t i) {
    if (a.is_scalar() && b.is_scalar()) return to_poly(kron_sum(a.scalar_action(i), b.scalar_action(i)));
    return kron_sum(a.action(i), b.action(i));
  });
}

Representation hom(const Representation& a, const Representation& b) {
  check_same_algebra(a, b);
  return map_actions(a, [&](std::size_t i) {
    if (a.is_scalar() && b.is_scalar()) return to_poly(hom_action(a.scalar_action(i), b.scalar_action(i)));
    return hom_action(a.action(i), b.action(i));
  });
}

std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Representation exterior(const Representation& r, std::size_t p) {
  auto basis = wedge_basis(r.dim(), p);
  std::map<std::vector<std::size_t>, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
  return map_actions(r, [&](std::size_t i) {
    if (r.is_scalar()) return to_poly(exterior_action(r.scalar_action(i), basis, idx));
    return exterior_action(r.action(i), basis, idx);
  });
}

Representation sym2(const Representation& r) {
  return map_actions(r, [&](std::size_t i) {
    if (r.is_scalar()) return to_poly(sym2_action(r.scalar_action(i)));
    return sym2_action(r.action(i));
  });
}

Representation direct_sum(const Representation& a, const Representation& b) {
  check_same_algebra(a, b);
  const std::size_t n = a.dim(), m = b.dim();
  return map_actions(a, [&](std::size_t i) {
    PMatrix r(n + m, n + m);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) r(x, y) = a.action(i)(x, y);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) r(n + x, n + y) = b.action(i)(x, y);
    return r;
  });
}

Representation restrict(const Representation& r, const Subalgebra& sub, std::vector<std::string> names) {
  if (!(sub.parent == r.algebra())) throw std::invalid_argument("restrict: subalgebra of a different algebra");
  AlgebraPtr h = share(sub.induced(std::move(names)));
  std::vector<PMatrix> act;
  for (const auto& x : sub.span) {
    PMatrix m(r.dim(), r.dim());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (sgn(x[i]) != 0) m += r.action(i) * Poly(x[i]);
    act.push_back(std::move(m));
  }
  return Representation::unchecked(h, std::move(act));
}

std::vector<Vector> invariants(const Representation& r) {
  const std::size_t n = r.dim(), k = r.algebra().dim();
  SparseMatrix stacked(n * k, n);
  for (std::size_t i = 0; i < k; ++i) {
    const QMatrix& m = r.scalar_action(i);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) stacked.add(i * n + a, b, m(a, b));
  }
  stacked.finish();
  return kernel(stacked);
}

std::vector<QMatrix> equivariant_maps(const Representation& a, const Representation& b) {
  std::vector<QMatrix> out;
  for (const auto& v : invariants(hom(a, b))) {
    QMatrix m(b.dim(), a.dim());
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = v[i * a.dim() + j];
    out.push_back(std::move(m));
  }
  return out;
}

InvariantLines invariant_lines(const Representation& r) {
  const std::size_t n = r.dim();
  InvariantLines res;
  if (n > 10) {
    res.status = "undecided";
    res.detail = "dimension above 10";
    return res;
  }
  bool any_equation = false;
  bool infinite = false;
  for (std::size_t chart = 0; chart < n; ++chart) {
    // v_chart = 1, v_j = 0 for j < chart, v_j free for j > chart.
    PVector v(n);
    std::vector<std::string> vars;
    v[chart] = 1;
    for (std::size_t j = chart + 1; j < n; ++j) {
      vars.push_back("v" + std::to_string(j + 1));
      v[j] = Poly::var(vars.back());
    }
    std::vector<Poly> eqs;
    for (std::size_t x = 0; x < r.algebra().dim(); ++x) {
      PVector av = r.action(x).apply(v);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
          Poly e = v[p] * av[q] - v[q] * av[p];
          if (!e.is_zero()) eqs.push_back(std::move(e));
        }
    }
    if (!eqs.empty()) any_equation = true;
    if (eqs.empty()) {
      if (!vars.empty()) {
        infinite = true;
      } else {
        Vector line(n);
        line[chart] = 1;
        res.lines.push_back(std::move(line));
      }
      continue;
    }
    std::vector<Poly> gb;
    try {
      gb = buchberger(eqs, MonomialOrder::grevlex(vars));
    } catch (const ResourceError& e) {
      res.status = "undecided";
      res.detail = e.what();
      return res;
    }
    if (is_unit_ideal(gb)) continue;
    bool linear = true;
    for (const auto& g : gb)
      if (g.degree() > 1) linear = false;
    if (!linear) {
      res.status = "undecided";
      res.detail = "nonlinear chart system";
      return res;
    }
    if (gb.size() < vars.size()) {
      infinite = true;
      continue;
    }
    // Reduced monic linear basis: each element is  v_k - value.
    Vector line(n);
    line[chart] = 1;
    for (const auto& g : gb) {
      auto gv = g.variables();
      if (gv.size() != 1) {
        res.status = "undecided";
        res.detail = "unexpected linear basis shape";
        return res;
      }
      std::size_t k = static_cast<std::size_t>(std::stoul(gv[0].substr(1))) - 1;
      line[k] = -g.constant_term();
    }
    res.lines.push_back(std::move(line));
  }
  if (!any_equation) {
    res.status = "all";
    res.lines.clear();
    res.detail = "all of projective space";
  } else if (infinite) {
    res.status = "infinite";
  } else {
    res.status = "finite";
  }
  return res;
}

}  // namespace parageom
