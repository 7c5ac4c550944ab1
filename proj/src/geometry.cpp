#include "parageom/geometry.hpp"

#include "parageom/cohomology.hpp"
#include "parageom/errors.hpp"
#include "parageom/linalg.hpp"

#include <functional>

namespace parageom {

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

Vector axpy(Vector y, const Scalar& a, const Vector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  return y;
}

QMatrix outer_basis(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> cols = a;
  cols.insert(cols.end(), b.begin(), b.end());
  return QMatrix::from_columns(cols, cols.empty() ? 0 : cols[0].size());
}

// X(a, b) for a bilinear antisymmetric map on 3-space given by its columns on
// the pairs (0,1), (0,2), (1,2).
Vector bil3(const QMatrix& x, const Vector& a, const Vector& b) {
  Vector out(x.rows());
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t t = s + 1; t < 3; ++t) {
      Scalar w = a[s] * b[t] - a[t] * b[s];
      if (sgn(w) == 0) continue;
      std::size_t p = pair_index(s, t, 3);
      for (std::size_t r = 0; r < out.size(); ++r) out[r] += w * x(r, p);
    }
  return out;
}

}  // namespace

HomogeneousModel coordinate_model(std::string name, LieAlgebra g, const std::vector<std::size_t>& h_idx,
                                  const std::vector<std::size_t>& m_idx, QMatrix J) {
  HomogeneousModel m;
  m.name = std::move(name);
  const std::size_t n = g.dim();
  for (auto i : h_idx) m.h_span.push_back(unit(n, i));
  for (auto i : m_idx) m.m_span.push_back(unit(n, i));
  m.g = std::move(g);
  m.J = std::move(J);
  return m;
}

ModelFrame::ModelFrame(const HomogeneousModel& model) : model_(&model), k_(model.dim_m()) {
  const LieAlgebra& g = model.g;
  const std::size_t n = g.dim(), dh = model.dim_h();
  if (dh + k_ != n) throw PreconditionError("model: h and m spans do not match dim g");
  QMatrix basis = outer_basis(model.h_span, model.m_span);
  QMatrix inv;
  try {
    inv = inverse(basis);
  } catch (const std::domain_error&) {
    throw PreconditionError("model: h and m spans are not a basis of g");
  }
  auto split = [&](const Vector& x, Vector& hp, Vector& mp) {
    Vector c = inv.apply(x);
    hp.assign(c.begin(), c.begin() + static_cast<long>(dh));
    mp.assign(c.begin() + static_cast<long>(dh), c.end());
  };
  brm_.resize(k_ * k_);
  brh_.resize(k_ * k_);
  for (std::size_t a = 0; a < k_; ++a)
    for (std::size_t b = 0; b < k_; ++b) split(g.bracket(model.m_span[a], model.m_span[b]), brh_[a * k_ + b], brm_[a * k_ + b]);
  for (std::size_t i = 0; i < dh; ++i) {
    QMatrix act(k_, k_);
    for (std::size_t b = 0; b < k_; ++b) {
      Vector hp, mp;
      split(g.bracket(model.h_span[i], model.m_span[b]), hp, mp);
      for (const auto& x : hp)
        if (sgn(x) != 0) reductive_ = false;
      for (std::size_t a = 0; a < k_; ++a) act(a, b) = mp[a];
    }
    iso_.push_back(std::move(act));
  }
}

Vector ModelFrame::bracket_m(const Vector& x, const Vector& y) const {
  Vector out(k_);
  for (std::size_t a = 0; a < k_; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < k_; ++b)
      if (sgn(y[b]) != 0) out = axpy(std::move(out), x[a] * y[b], brm_[a * k_ + b]);
  }
  return out;
}

void validate_model(const HomogeneousModel& model) {
  ModelFrame f(model);
  if (!model.h_span.empty() && !is_subalgebra(model.g, model.h_span)) throw PreconditionError("model: h is not a subalgebra");
  if (model.J.rows() == 0) return;
  const std::size_t k = model.dim_m();
  const QMatrix& J = model.J;
  if (J.rows() != k || J.cols() != k) throw PreconditionError("model: J must act on m");
  if (J * J != QMatrix::identity(k)) throw PreconditionError("model: J^2 is not the identity");
  if (sgn(J.trace()) != 0) throw PreconditionError("model: eigenspaces of J are unbalanced");
  for (std::size_t i = 0; i < model.dim_h(); ++i)
    if (commutator(f.isotropy(i), J) != QMatrix(k, k))
      throw PreconditionError("model: J is not invariant under " + std::to_string(i) + "-th isotropy element");
}

CurvaturePair curvature_maps(const HomogeneousModel& model) {
  validate_model(model);
  const std::size_t k = model.dim_m();
  if (k != 6 || model.J.rows() == 0) throw PreconditionError("curvature maps need a 6-dimensional m with J");
  ModelFrame f(model);
  CurvaturePair xi;
  xi.delta_plus = kernel(model.J - QMatrix::identity(k));
  xi.delta_minus = kernel(model.J + QMatrix::identity(k));
  QMatrix inv = inverse(outer_basis(xi.delta_plus, xi.delta_minus));
  auto project = [&](const std::vector<Vector>& d, std::size_t offset) {
    QMatrix x(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        Vector c = inv.apply(f.bracket_m(d[i], d[j]));
        for (std::size_t r = 0; r < 3; ++r) x(r, pair_index(i, j, 3)) = c[offset + r];
      }
    return x;
  };
  xi.xi_plus = project(xi.delta_plus, 3);
  xi.xi_minus = project(xi.delta_minus, 0);
  return xi;
}

bool is_nondegenerate(const CurvaturePair& xi) { return sgn(det(xi.xi_plus)) != 0 && sgn(det(xi.xi_minus)) != 0; }

bool is_nondegenerate(const HomogeneousModel& model) { return is_nondegenerate(curvature_maps(model)); }

QMatrix nijenhuis_matrix(const HomogeneousModel& model) {
  validate_model(model);
  ModelFrame f(model);
  const std::size_t k = model.dim_m();
  const QMatrix& J = model.J;
  if (J.rows() == 0) throw PreconditionError("nijenhuis tensor needs J");
  QMatrix n(k, k * (k - 1) / 2);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Vector x = unit(k, a), y = unit(k, b), jx = J.apply(x), jy = J.apply(y);
      Vector v = f.bracket_m(jx, jy);
      Vector w = J.apply(axpy(f.bracket_m(jx, y), 1, f.bracket_m(x, jy)));
      v = axpy(axpy(std::move(v), -1, w), 1, f.bracket_m(x, y));
      for (std::size_t r = 0; r < k; ++r) n(r, pair_index(a, b, k)) = v[r];
    }
  return n;
}

std::vector<QMatrix> symbol_g1(const CurvaturePair& xi) {
  // Unknowns: f+(r,c) at r*3+c, f-(r,c) at 9 + r*3+c.
  QMatrix sys(18, 18);
  std::size_t row = 0;
  auto add_block = [&](const QMatrix& x, std::size_t own, std::size_t other) {
    auto value = [&](std::size_t a, std::size_t b) { return bil3(x, unit(3, a), unit(3, b)); };
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) {
        Vector base = value(a, b);
        for (std::size_t s = 0; s < 3; ++s, ++row) {
          for (std::size_t r = 0; r < 3; ++r) {
            sys(row, own + r * 3 + a) += value(r, b)[s];
            sys(row, own + r * 3 + b) += value(a, r)[s];
          }
          for (std::size_t t = 0; t < 3; ++t) sys(row, other + s * 3 + t) -= base[t];
        }
      }
  };
  add_block(xi.xi_plus, 0, 9);
  add_block(xi.xi_minus, 9, 0);
  std::vector<QMatrix> out;
  for (const auto& v : kernel(sys)) {
    QMatrix f(6, 6);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        f(r, c) = v[r * 3 + c];
        f(3 + r, 3 + c) = v[9 + r * 3 + c];
      }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t prolongation_g2(const CurvaturePair& xi) {
  auto g1 = symbol_g1(xi);
  const std::size_t n = 6;
  QMatrix span(g1.size(), n * n);
  for (std::size_t i = 0; i < g1.size(); ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t y = 0; y < n; ++y) span(i, a * n + y) = g1[i](a, y);
  std::vector<Vector> ann;
  if (g1.empty()) {
    for (std::size_t i = 0; i < n * n; ++i) ann.push_back(unit(n * n, i));
  } else {
    ann = kernel(span);
  }
  const std::size_t pairs = n * (n + 1) / 2;
  std::vector<std::vector<std::size_t>> pid(n, std::vector<std::size_t>(n));
  std::size_t cnt = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) pid[x][y] = pid[y][x] = cnt++;
  SparseMatrix sys(n * ann.size(), pairs * n);
  std::size_t row = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& al : ann) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t y = 0; y < n; ++y)
          if (sgn(al[a * n + y]) != 0) sys.add(row, pid[x][y] * n + a, al[a * n + y]);
      ++row;
    }
  sys.finish();
  return kernel(sys).size();
}

VolumeNormalization volume_normalize(const CurvaturePair& xi) {
  if (!is_nondegenerate(xi)) throw PreconditionError("volume normalization needs nondegenerate Xi");
  VolumeNormalization v;
  v.psi_plus = QMatrix(3, 3);
  const std::size_t cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (std::size_t c = 0; c < 3; ++c) {
    Vector col(3);
    for (const auto& ijk : cyc) {
      Vector a = bil3(xi.xi_plus, unit(3, c), unit(3, ijk[0]));
      Vector b = bil3(xi.xi_plus, unit(3, ijk[1]), unit(3, ijk[2]));
      col = axpy(std::move(col), 1, bil3(xi.xi_minus, a, b));
    }
    for (std::size_t r = 0; r < 3; ++r) v.psi_plus(r, c) = col[r];
  }
  v.det = det(v.psi_plus);
  if (sgn(v.det) == 0) throw PreconditionError("Psi+ is singular");
  auto cp = charpoly(v.psi_plus);  // x^3 - tr x^2 + e2 x - det
  Scalar tr = -cp[2], e2 = cp[1];
  v.c1_cubed = tr * tr * tr / v.det;
  v.c2_cubed = e2 * e2 * e2 / (v.det * v.det);
  Scalar root;
  if (exact_cube_root(v.det, root)) {
    v.exact = true;
    v.psi_bar = v.psi_plus * (Scalar(1) / root);
  }
  return v;
}

std::string classify_nijenhuis(const QMatrix& psi) {
  if (psi.rows() != 3 || psi.cols() != 3) throw std::invalid_argument("classify_nijenhuis: 3x3 matrix expected");
  auto cp = charpoly(psi);
  const Scalar &a = cp[2], &b = cp[1], &c = cp[0];
  Scalar disc = 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
  if (sgn(disc) > 0) return "real-diagonalizable";
  if (sgn(disc) < 0) return "complex-pair";
  const QMatrix id = QMatrix::identity(3);
  std::size_t mdeg;
  if (psi == id * psi(0, 0)) {
    mdeg = 1;
  } else {
    QMatrix stack(9, 3);
    QMatrix sq = psi * psi;
    for (std::size_t i = 0; i < 9; ++i) {
      stack(i, 0) = id.data()[i];
      stack(i, 1) = psi.data()[i];
      stack(i, 2) = sq.data()[i];
    }
    mdeg = rank(stack) == 2 ? 2 : 3;
  }
  const bool triple = a * a == 3 * b;
  if (mdeg == 1) return "real-diagonalizable";
  if (triple) return mdeg == 3 ? "jordan-3" : "jordan-2";
  return mdeg == 3 ? "jordan-2" : "real-diagonalizable";
}

std::vector<QMatrix> invariant_metrics(const HomogeneousModel& model) {
  validate_model(model);
  ModelFrame f(model);
  const std::size_t k = model.dim_m();
  std::vector<QMatrix> basis;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      QMatrix e(k, k);
      e(a, b) = 1;
      e(b, a) = 1;
      basis.push_back(std::move(e));
    }
  std::vector<std::function<QMatrix(const QMatrix&)>> conds;
  for (std::size_t i = 0; i < model.dim_h(); ++i)
    conds.push_back([&, i](const QMatrix& g) { return f.isotropy(i).transpose() * g + g * f.isotropy(i); });
  if (model.J.rows() != 0) conds.push_back([&](const QMatrix& g) { return model.J.transpose() * g * model.J + g; });
  QMatrix sys(conds.size() * k * k, basis.size());
  for (std::size_t u = 0; u < basis.size(); ++u)
    for (std::size_t c = 0; c < conds.size(); ++c) {
      QMatrix img = conds[c](basis[u]);
      for (std::size_t i = 0; i < k * k; ++i) sys(c * k * k + i, u) = img.data()[i];
    }
  std::vector<QMatrix> out;
  for (const auto& v : kernel(sys)) {
    QMatrix g(k, k);
    for (std::size_t u = 0; u < basis.size(); ++u)
      if (sgn(v[u]) != 0) g += basis[u] * v[u];
    out.push_back(normalize_metric(g));
  }
  return out;
}

QMatrix canonical_metric(const HomogeneousModel& model) {
  CurvaturePair xi = curvature_maps(model);
  if (sgn(det(xi.xi_plus)) == 0) throw PreconditionError("canonical metric needs invertible Xi+");
  QMatrix to_pairs = inverse(xi.xi_plus);
  QMatrix frame = inverse(outer_basis(xi.delta_plus, xi.delta_minus));
  const std::size_t k = model.dim_m();
  // <xi, p> = Omega+(Xi+^{-1} xi, p) with Omega+ the determinant in the Delta+ basis.
  auto pairing = [&](const Vector& c, const Vector& d) -> Scalar {
    Vector xi_part(c.begin() + 3, c.end()), p(d.begin(), d.begin() + 3);
    Vector w = to_pairs.apply(xi_part);
    return w[pair_index(0, 1, 3)] * p[2] - w[pair_index(0, 2, 3)] * p[1] + w[pair_index(1, 2, 3)] * p[0];
  };
  QMatrix g(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Vector ca = frame.col(a), cb = frame.col(b);
      g(a, b) = (pairing(ca, cb) + pairing(cb, ca)) / 2;
    }
  return normalize_metric(g);
}

QMatrix normalize_metric(const QMatrix& g) {
  const std::size_t k = g.rows();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (sgn(g(a, b)) != 0) return g * (Scalar(1) / g(a, b));
  for (std::size_t a = 0; a < k; ++a)
    if (sgn(g(a, a)) != 0) return g * (Scalar(1) / g(a, a));
  return g;
}

std::vector<QMatrix> nomizu_map(const HomogeneousModel& model, const QMatrix& g) {
  ModelFrame f(model);
  if (!f.reductive()) throw PreconditionError("Levi-Civita map needs a reductive complement");
  const std::size_t k = model.dim_m();
  QMatrix ginv;
  try {
    ginv = inverse(g);
  } catch (const std::domain_error&) {
    throw PreconditionError("metric is degenerate");
  }
  std::vector<QMatrix> lam;
  for (std::size_t a = 0; a < k; ++a) {
    QMatrix l(k, k);
    for (std::size_t b = 0; b < k; ++b) {
      Vector rhs(k);
      for (std::size_t c = 0; c < k; ++c) {
        Vector gca = g.apply(f.bracket_m(c, a));
        Vector gcb = g.apply(f.bracket_m(c, b));
        rhs[c] = (gca[b] + gcb[a]) / 2;
      }
      Vector u = ginv.apply(rhs);
      const Vector& br = f.bracket_m(a, b);
      for (std::size_t r = 0; r < k; ++r) l(r, b) = br[r] / 2 + u[r];
    }
    lam.push_back(std::move(l));
  }
  return lam;
}

Trilinear nabla_omega(const HomogeneousModel& model, const QMatrix& g) {
  if (model.J.rows() == 0) throw PreconditionError("nabla omega needs J");
  const std::size_t k = model.dim_m();
  QMatrix omega = g * model.J;
  auto lam = nomizu_map(model, g);
  Trilinear t(k * k * k);
  for (std::size_t x = 0; x < k; ++x) {
    QMatrix tx = -(lam[x].transpose() * omega + omega * lam[x]);
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z) t[(x * k + y) * k + z] = tx(y, z);
  }
  return t;
}

Trilinear d_omega(const HomogeneousModel& model, const QMatrix& omega) {
  ModelFrame f(model);
  const std::size_t k = model.dim_m();
  auto w = [&](const Vector& u, std::size_t z) {
    Scalar s = 0;
    for (std::size_t a = 0; a < k; ++a)
      if (sgn(u[a]) != 0) s += u[a] * omega(a, z);
    return s;
  };
  Trilinear t(k * k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z)
        t[(x * k + y) * k + z] = -w(f.bracket_m(x, y), z) - w(f.bracket_m(y, z), x) - w(f.bracket_m(z, x), y);
  return t;
}

std::string nearly_para_kahler(const HomogeneousModel& model, const QMatrix& g) {
  const std::size_t k = model.dim_m();
  Trilinear t = nabla_omega(model, g);
  bool zero = true, skew = true;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z) {
        const Scalar& v = t[(x * k + y) * k + z];
        if (sgn(v) != 0) zero = false;
        if (v != -t[(y * k + x) * k + z] || v != -t[(x * k + z) * k + y]) skew = false;
      }
  if (zero) return "non-strict";
  return skew ? "strict" : "no";
}

bool check_p_identity(const HomogeneousModel& model, const QMatrix& g) {
  const std::size_t k = model.dim_m();
  Trilinear t = nabla_omega(model, g);
  Trilinear d = d_omega(model, g * model.J);
  auto at = [&](const Trilinear& x, std::size_t a, std::size_t b, std::size_t c) { return x[(a * k + b) * k + c]; };
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z)
        if (at(t, x, y, z) + at(t, y, z, x) + at(t, z, x, y) != at(d, x, y, z)) return false;
  return true;
}

QMatrix ricci(const HomogeneousModel& model, const QMatrix& g) {
  ModelFrame f(model);
  const std::size_t k = model.dim_m();
  auto lam = nomizu_map(model, g);
  auto lam_of = [&](const Vector& v) {
    QMatrix r(k, k);
    for (std::size_t a = 0; a < k; ++a)
      if (sgn(v[a]) != 0) r += lam[a] * v[a];
    return r;
  };
  auto iso_of = [&](const Vector& v) {
    QMatrix r(k, k);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) r += f.isotropy(i) * v[i];
    return r;
  };
  QMatrix ric(k, k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      QMatrix r = commutator(lam[x], lam[y]) - lam_of(f.bracket_m(x, y)) - iso_of(f.bracket_h(x, y));
      // Ric(y, z) += (R(x, y) z)_x
      for (std::size_t z = 0; z < k; ++z) ric(y, z) += r(x, z);
    }
  return ric;
}

EinsteinVerdict is_einstein(const HomogeneousModel& model, const QMatrix& g) {
  QMatrix ric = ricci(model, g);
  EinsteinVerdict v;
  const std::size_t k = g.rows();
  for (std::size_t i = 0; i < k * k; ++i)
    if (sgn(g.data()[i]) != 0) {
      v.lambda = ric.data()[i] / g.data()[i];
      break;
    }
  v.einstein = ric == g * v.lambda;
  if (!v.einstein) v.lambda = 0;
  return v;
}

namespace {

HomogeneousModel su2_cubed_frame(QMatrix J) {
  std::vector<std::string> names;
  for (const char* p : {"x", "y", "z"})
    for (int i = 1; i <= 3; ++i) names.push_back(std::string(p) + std::to_string(i));
  LieAlgebra g(names);
  for (std::size_t f = 0; f < 3; ++f)
    for (std::size_t i = 0; i < 3; ++i) {
      PVector v(9);
      v[f * 3 + (i + 2) % 3] = 1;
      g.set(f * 3 + i, f * 3 + (i + 1) % 3, v);
    }
  HomogeneousModel m;
  m.name = "su2cubed";
  for (std::size_t i = 0; i < 3; ++i) {
    Vector d(9);
    d[i] = d[3 + i] = d[6 + i] = 1;
    m.h_span.push_back(d);
  }
  for (std::size_t i = 0; i < 6; ++i) m.m_span.push_back(unit(9, i));
  m.g = std::move(g);
  m.J = std::move(J);
  return m;
}

}  // namespace

HomogeneousModel su2_cubed_model(const Scalar& r, const Scalar& t) {
  if (sgn(t) == 0) throw std::invalid_argument("su2 cubed family needs t != 0");
  QMatrix J(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    J(i, i) = r;
    J(3 + i, i) = t;
    J(i, 3 + i) = (1 - r * r) / t;
    J(3 + i, 3 + i) = -r;
  }
  return su2_cubed_frame(std::move(J));
}

HomogeneousModel su2_cubed_limit_model(int sign, const Scalar& s) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  QMatrix J(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    J(i, i) = sign;
    J(i, 3 + i) = s;
    J(3 + i, 3 + i) = -sign;
  }
  return su2_cubed_frame(std::move(J));
}

std::string nijenhuis_verdict(const HomogeneousModel& model) {
  QMatrix n = nijenhuis_matrix(model);
  if (n.is_zero()) return "integrable";
  return rank(n) == model.m_span.size() ? "nondegenerate" : "degenerate-nonintegrable";
}

std::string nijenhuis_family_su2cubed(const Scalar& r, const Scalar& t) {
  return nijenhuis_verdict(su2_cubed_model(r, t));
}

}  // namespace parageom
