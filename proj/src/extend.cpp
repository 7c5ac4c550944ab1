#include "parageom/extend.hpp"

#include "parageom/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace parageom {

namespace {

std::size_t npairs(std::size_t n) { return n * (n - 1) / 2; }

std::size_t dim_h(const Representation& m) { return m.algebra().dim(); }

// Entry-wise coefficient of a single parameter (phi assumed affine).
PMatrix coefficient(const PMatrix& a, const std::string& var) {
  PMatrix r(a.rows(), a.cols());
  Monomial mono(var);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Poly(a(i, j).coeff(mono));
  return r;
}

std::vector<std::string> parameters(const Cocycle& c) {
  std::set<std::string> vars;
  for (const auto& m : c.phi)
    for (const auto& x : m.data())
      for (const auto& v : x.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

Cocycle map_cocycle(const Cocycle& c, const std::function<PMatrix(const PMatrix&)>& f) {
  Cocycle r;
  for (const auto& m : c.phi) r.phi.push_back(f(m));
  return r;
}

// F(G(h,u1),u2) - F(G(h,u2),u1) with F, G in h* (x) m* (x) h.
PairCochain compose(const std::vector<PMatrix>& f, const std::vector<PMatrix>& g, std::size_t dm) {
  const std::size_t dh = g.size(), P = npairs(dm);
  PairCochain out(dh, PMatrix(dh, P));
  for (std::size_t k = 0; k < dh; ++k)
    for (std::size_t u1 = 0; u1 < dm; ++u1)
      for (std::size_t u2 = u1 + 1; u2 < dm; ++u2) {
        const std::size_t p = pair_index(u1, u2, dm);
        for (std::size_t i = 0; i < dh; ++i) {
          const Poly& a = g[k](i, u1);
          const Poly& b = g[k](i, u2);
          if (a.is_zero() && b.is_zero()) continue;
          for (std::size_t t = 0; t < dh; ++t) {
            if (!a.is_zero() && !f[i](t, u2).is_zero()) out[k](t, p) += a * f[i](t, u2);
            if (!b.is_zero() && !f[i](t, u1).is_zero()) out[k](t, p) -= b * f[i](t, u1);
          }
        }
      }
  return out;
}

// F(h, theta(u1,u2)) for theta: L2m -> m.
PairCochain feed(const std::vector<PMatrix>& f, const PMatrix& theta) {
  PairCochain out;
  for (const auto& fk : f) out.push_back(fk * theta);
  return out;
}

// sigma(u1).u2 - sigma(u2).u1 for sigma: m -> h.
PMatrix delta0(const Representation& m, const PMatrix& sigma) {
  const std::size_t dh = dim_h(m), dm = m.dim();
  PMatrix out(dm, npairs(dm));
  for (std::size_t u1 = 0; u1 < dm; ++u1)
    for (std::size_t u2 = u1 + 1; u2 < dm; ++u2) {
      const std::size_t p = pair_index(u1, u2, dm);
      for (std::size_t i = 0; i < dh; ++i) {
        const Poly& a = sigma(i, u1);
        const Poly& b = sigma(i, u2);
        if (a.is_zero() && b.is_zero()) continue;
        for (std::size_t t = 0; t < dm; ++t) {
          if (!a.is_zero() && !m.action(i)(t, u2).is_zero()) out(t, p) += a * m.action(i)(t, u2);
          if (!b.is_zero() && !m.action(i)(t, u1).is_zero()) out(t, p) -= b * m.action(i)(t, u1);
        }
      }
    }
  return out;
}

PairCochain operator+(PairCochain a, const PairCochain& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}
PairCochain operator-(PairCochain a, const PairCochain& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

PMatrix theta_from_vector(const Vector& v, std::size_t rows, std::size_t cols) {
  PMatrix r(rows, cols);
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t p = 0; p < cols; ++p) r(a, p) = Poly(v[a * cols + p]);
  return r;
}

Vector scalar_vector(const PVector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].constant_value();
  return r;
}

}  // namespace

Cocycle zero_cocycle(const Representation& m) {
  return Cocycle{std::vector<PMatrix>(dim_h(m), PMatrix(dim_h(m), m.dim()))};
}

Cocycle cocycle_from_cochain(const Cochain& c, std::size_t dh, std::size_t dm) {
  Cocycle r;
  for (std::size_t k = 0; k < dh; ++k) {
    PMatrix a(dh, dm);
    for (std::size_t i = 0; i < dh; ++i)
      for (std::size_t j = 0; j < dm; ++j) a(i, j) = Poly(c.coeffs[k * dh * dm + i * dm + j]);
    r.phi.push_back(std::move(a));
  }
  return r;
}

Cocycle combine(const std::vector<Cocycle>& reps, const std::vector<std::string>& names) {
  if (reps.empty()) throw std::invalid_argument("combine: no representatives");
  if (reps.size() != names.size()) throw std::invalid_argument("combine: one name per representative");
  Cocycle r = map_cocycle(reps[0], [](const PMatrix& a) { return PMatrix(a.rows(), a.cols()); });
  for (std::size_t s = 0; s < reps.size(); ++s)
    for (std::size_t k = 0; k < r.phi.size(); ++k) r.phi[k] += reps[s].phi[k] * Poly::var(names[s]);
  return r;
}

Cocycle operator+(const Cocycle& a, const Cocycle& b) {
  Cocycle r = a;
  for (std::size_t k = 0; k < r.phi.size(); ++k) r.phi[k] += b.phi[k];
  return r;
}

Cocycle substitute(const Cocycle& c, const std::map<std::string, Poly>& values) {
  return map_cocycle(c, [&](const PMatrix& a) { return substitute(a, values); });
}

Cocycle substitute(const Cocycle& c, const std::map<std::string, Scalar>& values) {
  return map_cocycle(c, [&](const PMatrix& a) { return substitute(a, values); });
}

Cocycle coboundary(const Representation& m, const PMatrix& a) {
  const LieAlgebra& h = m.algebra();
  Cocycle r;
  for (std::size_t k = 0; k < h.dim(); ++k) r.phi.push_back(h.ad(k) * a - a * m.action(k));
  return r;
}

std::vector<std::string> cocycle_defect(const Representation& m, const Cocycle& phi) {
  const LieAlgebra& h = m.algebra();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      PMatrix d = h.ad(i) * phi.phi[j] - phi.phi[j] * m.action(i) - h.ad(j) * phi.phi[i] + phi.phi[i] * m.action(j);
      for (std::size_t l = 0; l < h.dim(); ++l)
        if (!h.c(i, j, l).is_zero()) d -= phi.phi[l] * h.c(i, j, l);
      for (std::size_t a = 0; a < d.rows(); ++a)
        for (std::size_t b = 0; b < d.cols(); ++b)
          if (!d(a, b).is_zero())
            out.push_back("d phi(" + h.names()[i] + "," + h.names()[j] + ")[" + h.names()[a] + "," + std::to_string(b) +
                          "] = " + d(a, b).str());
    }
  return out;
}

Representation twisted_module(const Representation& m, const Cocycle& phi) {
  const LieAlgebra& h = m.algebra();
  const std::size_t dh = h.dim(), dm = m.dim();
  if (phi.phi.size() != dh) throw std::invalid_argument("twisted_module: one cocycle matrix per basis element");
  for (const auto& a : phi.phi)
    if (a.rows() != dh || a.cols() != dm) throw std::invalid_argument("twisted_module: cocycle matrices must be dim h x dim m");
  auto defect = cocycle_defect(m, phi);
  if (!defect.empty()) {
    std::string msg = "cocycle condition fails:";
    for (std::size_t i = 0; i < defect.size() && i < 8; ++i) msg += " " + defect[i] + ";";
    if (defect.size() > 8) msg += " (" + std::to_string(defect.size()) + " components)";
    throw PreconditionError(msg);
  }
  std::vector<PMatrix> act;
  for (std::size_t k = 0; k < dh; ++k) {
    PMatrix r(dh + dm, dh + dm);
    PMatrix ad = h.ad(k);
    for (std::size_t a = 0; a < dh; ++a)
      for (std::size_t b = 0; b < dh; ++b) r(a, b) = ad(a, b);
    for (std::size_t a = 0; a < dh; ++a)
      for (std::size_t b = 0; b < dm; ++b) r(a, dh + b) = phi.phi[k](a, b);
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t b = 0; b < dm; ++b) r(dh + a, dh + b) = m.action(k)(a, b);
    act.push_back(std::move(r));
  }
  return Representation::unchecked(m.algebra_ptr(), std::move(act));
}

PairCochain delta_op(const Representation& m, const Cocycle& phi) {
  PairCochain out;
  for (const auto& pk : phi.phi) out.push_back(delta0(m, pk));
  return out;
}

PairCochain differential(const Representation& m, const PMatrix& theta, bool target_is_h) {
  Representation w2 = exterior(m, 2);
  const LieAlgebra& h = m.algebra();
  PairCochain out;
  for (std::size_t k = 0; k < h.dim(); ++k) {
    PMatrix left = target_is_h ? h.ad(k) : m.action(k);
    out.push_back(left * theta - theta * w2.action(k));
  }
  return out;
}

PairCochain q_op(const Representation& m, const Cocycle& phi, const PMatrix& theta_m) {
  if (!is_zero(delta_op(m, phi) - differential(m, theta_m, false)))
    throw PreconditionError("q_op: theta_m does not solve delta phi = d theta_m");
  return compose(phi.phi, phi.phi, m.dim()) - feed(phi.phi, theta_m);
}

PairCochain q_sigma(const Representation& m, const PMatrix& sigma, const Cocycle& phi, const PMatrix& theta_m) {
  std::vector<PMatrix> ds = coboundary(m, sigma).phi;
  const std::size_t dm = m.dim();
  PMatrix dsig = delta0(m, sigma);
  return compose(ds, phi.phi, dm) + compose(phi.phi, ds, dm) + compose(ds, ds, dm) - feed(phi.phi, dsig) -
         feed(ds, theta_m) - feed(ds, dsig);
}

PairCochain p_nu(const Representation& m, const PMatrix& nu, const Cocycle& phi) {
  if (!is_zero(differential(m, nu, false))) throw PreconditionError("p_nu: nu is not h-invariant");
  return feed(phi.phi, nu);
}

PVector flatten(const PairCochain& c) {
  PVector out;
  for (const auto& m : c)
    for (const auto& x : m.data()) out.push_back(x);
  return out;
}

bool is_zero(const PairCochain& c) {
  for (const auto& m : c)
    if (!m.is_zero()) return false;
  return true;
}

std::vector<Poly> linear_span_basis(const std::vector<Poly>& polys) {
  std::map<Monomial, std::size_t> cols;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) cols.emplace(t.mono, 0);
  std::vector<Monomial> monos;
  for (auto& [mono, idx] : cols) {
    idx = monos.size();
    monos.push_back(mono);
  }
  Echelon e(monos.size());
  for (const auto& p : polys) {
    SparseRow row;
    for (const auto& t : p.terms()) row.emplace_back(cols.at(t.mono), t.coef);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    e.insert(row);
  }
  std::vector<Poly> out;
  for (const auto& row : e.rows()) {
    Poly p;
    for (const auto& [c, x] : row) p += Poly::monomial(monos[c], x);
    out.push_back(std::move(p));
  }
  return out;
}

ExtensionVerdict check_extension_constraints(const Representation& m, const Cocycle& phi, const GroebnerLimits& limits) {
  const std::size_t dm = m.dim(), P = npairs(dm);
  ExtensionVerdict v;
  auto params = parameters(phi);
  for (const auto& pm : phi.phi)
    for (const auto& x : pm.data())
      if (x.degree() > 1) throw std::invalid_argument("check_extension_constraints: cocycle must be affine in its parameters");

  Representation wm = hom(exterior(m, 2), m);
  Representation wh = hom(exterior(m, 2), adjoint(m.algebra_ptr()));
  QMatrix d0m = ce_differential(wm, 0).dense();

  std::map<std::string, Scalar> zeros;
  for (const auto& p : params) zeros[p] = 0;

  // Step 1: [delta phi] = 0, jointly in (parameters, theta_m).
  const std::size_t r = params.size();
  {
    QMatrix a(d0m.rows(), r + d0m.cols());
    std::vector<Vector> cols;
    for (const auto& p : params) {
      Cocycle part = map_cocycle(phi, [&](const PMatrix& x) { return coefficient(x, p); });
      cols.push_back(scalar_vector(flatten(delta_op(m, part))));
    }
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) = cols[j][i];
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < d0m.cols(); ++j) a(i, r + j) = d0m(i, j);
    Vector rhs = scalar_vector(flatten(delta_op(m, substitute(phi, zeros))));
    for (auto& x : rhs) x = -x;
    AffineSolution sol = solve_affine(a, rhs);
    if (!sol.feasible) {
      v.detail = "coboundary condition fails: [delta phi] != 0 for every parameter value";
      return v;
    }
    v.step1 = true;
    if (r > 0) {
      QMatrix hc(r, sol.homogeneous.size());
      for (std::size_t k = 0; k < sol.homogeneous.size(); ++k)
        for (std::size_t j = 0; j < r; ++j) hc(j, k) = sol.homogeneous[k][j];
      std::vector<Vector> ys = sol.homogeneous.empty() ? std::vector<Vector>{} : left_kernel(hc);
      if (sol.homogeneous.empty())
        for (std::size_t j = 0; j < r; ++j) {
          Vector y(r);
          y[j] = 1;
          ys.push_back(y);
        }
      QMatrix cons(ys.size(), r + 1);
      for (std::size_t s = 0; s < ys.size(); ++s) {
        Scalar rhs_s = 0;
        for (std::size_t j = 0; j < r; ++j) {
          cons(s, j) = ys[s][j];
          rhs_s += ys[s][j] * sol.particular[j];
        }
        cons(s, r) = rhs_s;
      }
      auto [red, pivots] = rref(cons);
      for (std::size_t s = 0; s < pivots.size(); ++s) {
        Poly lin;
        Poly value(red(s, r));
        for (std::size_t j = 0; j < r; ++j) {
          if (sgn(red(s, j)) == 0) continue;
          lin += Poly::var(params[j]) * red(s, j);
          if (j != pivots[s]) value -= Poly::var(params[j]) * red(s, j);
        }
        v.linear_constraints.push_back(lin - Poly(red(s, r)));
        v.substitution[params[pivots[s]]] = value;
      }
    }
  }

  Cocycle phi1 = substitute(phi, v.substitution);
  std::vector<std::string> free;
  for (const auto& p : params)
    if (!v.substitution.count(p)) free.push_back(p);

  // Particular theta_m, affine in the free parameters.
  {
    auto solve_part = [&](const Cocycle& part) {
      AffineSolution s = solve_affine(d0m, scalar_vector(flatten(delta_op(m, part))));
      if (!s.feasible) throw std::logic_error("check_extension_constraints: inconsistent coboundary reduction");
      return theta_from_vector(s.particular, dm, P);
    };
    std::map<std::string, Scalar> z;
    for (const auto& p : free) z[p] = 0;
    v.theta_m = solve_part(substitute(phi1, z));
    for (const auto& p : free) {
      Cocycle part = map_cocycle(phi1, [&](const PMatrix& x) { return coefficient(x, p); });
      v.theta_m += solve_part(part) * Poly::var(p);
    }
  }

  // Step 2: Q phi - sum s_k p_{nu_k} in B^1(h, L2m* (x) h).
  for (const auto& inv : invariants(wm)) v.nu_basis.push_back(to_scalar(theta_from_vector(inv, dm, P)));
  PVector total = flatten(q_op(m, phi1, v.theta_m));
  std::vector<std::string> svars;
  for (std::size_t k = 0; k < v.nu_basis.size(); ++k) {
    svars.push_back("_s" + std::to_string(k + 1));
    PVector pk = flatten(p_nu(m, to_poly(v.nu_basis[k]), phi1));
    for (std::size_t i = 0; i < total.size(); ++i)
      if (!pk[i].is_zero()) total[i] -= pk[i] * Poly::var(svars.back());
  }
  SparseMatrix d0h = ce_differential(wh, 0);
  Echelon image(d0h.rows);
  for (const auto& row : d0h.transpose().data)
    if (!row.empty()) image.insert(row);
  std::map<Monomial, Vector> parts;
  for (std::size_t i = 0; i < total.size(); ++i)
    for (const auto& t : total[i].terms()) {
      auto it = parts.try_emplace(t.mono, Vector(total.size())).first;
      it->second[i] = t.coef;
    }
  std::map<std::size_t, Poly> eqs;
  for (auto& [mono, vec] : parts) {
    image.reduce(vec);
    for (std::size_t i = 0; i < vec.size(); ++i)
      if (sgn(vec[i]) != 0) eqs[i] += Poly::monomial(mono, vec[i]);
  }
  std::vector<Poly> system;
  for (auto& [i, p] : eqs)
    if (!p.is_zero()) system.push_back(p);
  system = linear_span_basis(system);
  if (system.empty()) {
    v.satisfiable = true;
    v.detail = "image condition holds identically";
    return v;
  }
  MonomialOrder order = svars.empty() ? MonomialOrder::grevlex(free) : MonomialOrder::elimination(svars, free);
  std::vector<Poly> full = buchberger(system, order, limits);
  if (is_unit_ideal(full)) {
    v.detail = "image condition fails: no (theta_h, nu) for any parameter value";
    return v;
  }
  for (const auto& g : full) {
    auto vars = g.variables();
    bool has_s = std::any_of(vars.begin(), vars.end(), [](const std::string& x) { return x.rfind("_s", 0) == 0; });
    if (!has_s) v.residual_ideal.push_back(g);
  }
  v.satisfiable = true;
  v.detail = v.residual_ideal.empty() ? "image condition solvable for all remaining parameters"
                                      : "image condition imposes the residual ideal";
  return v;
}

BracketSpace bracket_space(const Representation& m, const Representation& target) {
  const std::size_t dh = dim_h(m);
  if (target.dim() != dh + m.dim()) throw std::invalid_argument("bracket_space: target must live on h + m");
  auto maps = equivariant_maps(exterior(m, 2), target);
  BracketSpace out;
  const std::size_t P = npairs(m.dim());
  // Combinations with vanishing m-part are the vertical brackets.
  QMatrix mpart(m.dim() * P, maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k)
    for (std::size_t a = 0; a < m.dim(); ++a)
      for (std::size_t p = 0; p < P; ++p) mpart(a * P + p, k) = maps[k](dh + a, p);
  Echelon span(target.dim() * P);
  auto add = [&](const QMatrix& x) {
    Vector flat(x.data().begin(), x.data().end());
    if (span.insert(flat)) out.basis.push_back(x);
  };
  for (const auto& lam : kernel(mpart)) {
    QMatrix x(target.dim(), P);
    for (std::size_t k = 0; k < maps.size(); ++k)
      if (sgn(lam[k]) != 0) x += maps[k] * lam[k];
    add(x);
  }
  out.vertical = out.basis.size();
  for (const auto& x : maps) add(x);
  out.horizontal = out.basis.size() - out.vertical;
  return out;
}

LieAlgebra reconstruct(const ExtensionDatum& d) {
  const LieAlgebra& h = d.m.algebra();
  const std::size_t dh = h.dim(), dm = d.m.dim();
  if (d.m_names.size() != dm) throw std::invalid_argument("reconstruct: one name per module basis element");
  std::vector<std::string> names = h.names();
  names.insert(names.end(), d.m_names.begin(), d.m_names.end());
  LieAlgebra g(names);
  const std::size_t n = dh + dm;
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = i + 1; j < dh; ++j) {
      PVector v(n);
      for (std::size_t k = 0; k < dh; ++k) v[k] = h.c(i, j, k);
      g.set(i, j, v);
    }
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t u = 0; u < dm; ++u) {
      PVector v(n);
      for (std::size_t b = 0; b < dh; ++b) v[b] = d.phi.phi[i](b, u);
      for (std::size_t a = 0; a < dm; ++a) v[dh + a] = d.m.action(i)(a, u);
      g.set(i, dh + u, v);
    }
  for (std::size_t u1 = 0; u1 < dm; ++u1)
    for (std::size_t u2 = u1 + 1; u2 < dm; ++u2) {
      const std::size_t p = pair_index(u1, u2, dm);
      PVector v(n);
      for (std::size_t b = 0; b < dh; ++b) v[b] = d.theta_h(b, p);
      for (std::size_t a = 0; a < dm; ++a) v[dh + a] = d.theta_m(a, p);
      g.set(dh + u1, dh + u2, v);
    }
  return g;
}

std::pair<PMatrix, PMatrix> split_brackets(const LieAlgebra& g, std::size_t dh) {
  const std::size_t dm = g.dim() - dh, P = npairs(dm);
  PMatrix tm(dm, P), th(dh, P);
  for (std::size_t u1 = 0; u1 < dm; ++u1)
    for (std::size_t u2 = u1 + 1; u2 < dm; ++u2) {
      const std::size_t p = pair_index(u1, u2, dm);
      for (std::size_t b = 0; b < dh; ++b) th(b, p) = g.c(dh + u1, dh + u2, b);
      for (std::size_t a = 0; a < dm; ++a) tm(a, p) = g.c(dh + u1, dh + u2, dh + a);
    }
  return {tm, th};
}

std::vector<Poly> lambda3_residuals(const LieAlgebra& g, std::size_t dh) {
  std::vector<Poly> out;
  for (const auto& r : jacobi_defect(g))
    if (r.i >= dh) out.push_back(r.value);
  return out;
}

}  // namespace parageom
