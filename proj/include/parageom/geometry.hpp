#pragma once

#include "parageom/lie_algebra.hpp"

#include <string>
#include <vector>

namespace parageom {

/// g with subalgebra h and complement m at the origin of G/H. J acts on m
/// coordinates (column convention); an empty J means no almost product
/// structure is attached.
struct HomogeneousModel {
  std::string name;
  LieAlgebra g;
  std::vector<Vector> h_span;
  std::vector<Vector> m_span;
  QMatrix J;

  std::size_t dim_m() const { return m_span.size(); }
  std::size_t dim_h() const { return h_span.size(); }
};

/// Model whose h and m are coordinate subsets of g's basis.
HomogeneousModel coordinate_model(std::string name, LieAlgebra g, const std::vector<std::size_t>& h_idx,
                                  const std::vector<std::size_t>& m_idx, QMatrix J);

/// Bracket data at the origin, in (h, m) coordinates.
class ModelFrame {
 public:
  explicit ModelFrame(const HomogeneousModel& model);

  const HomogeneousModel& model() const { return *model_; }
  std::size_t k() const { return k_; }
  /// m-component of [m_a, m_b].
  const Vector& bracket_m(std::size_t a, std::size_t b) const { return brm_[a * k_ + b]; }
  /// h-component of [m_a, m_b].
  const Vector& bracket_h(std::size_t a, std::size_t b) const { return brh_[a * k_ + b]; }
  Vector bracket_m(const Vector& x, const Vector& y) const;
  /// Isotropy action of h_i on g/h = m.
  const QMatrix& isotropy(std::size_t i) const { return iso_[i]; }
  bool reductive() const { return reductive_; }

 private:
  const HomogeneousModel* model_;
  std::size_t k_ = 0;
  std::vector<Vector> brm_, brh_;
  std::vector<QMatrix> iso_;
  bool reductive_ = true;
};

/// Throws PreconditionError when the model is malformed: h not closed, spans
/// not a basis, J^2 != 1, unbalanced eigenspaces or J not h-invariant.
void validate_model(const HomogeneousModel& model);

/// Xi+: L2 Delta+ -> Delta-, Xi-: L2 Delta- -> Delta+ as 3x3 matrices; columns
/// follow the pairs (0,1), (0,2), (1,2) of the eigenbases.
struct CurvaturePair {
  QMatrix xi_plus, xi_minus;
  std::vector<Vector> delta_plus, delta_minus;  // eigenbases in m coordinates
};

CurvaturePair curvature_maps(const HomogeneousModel& model);
bool is_nondegenerate(const CurvaturePair& xi);
bool is_nondegenerate(const HomogeneousModel& model);

/// N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] + [X,Y] with the m-projected bracket,
/// as a (dim m) x C(dim m, 2) matrix.
QMatrix nijenhuis_matrix(const HomogeneousModel& model);

/// Solutions f = (f+, f-) as 6x6 block matrices in (Delta+, Delta-) coordinates.
std::vector<QMatrix> symbol_g1(const CurvaturePair& xi);
/// Dimension of the first prolongation of symbol_g1.
std::size_t prolongation_g2(const CurvaturePair& xi);

struct VolumeNormalization {
  QMatrix psi_plus;  // Psi+(., p1^p2^p3) in the Delta+ eigenbasis
  Scalar det;
  /// det is the cube of a rational: psi_bar = psi_plus / cbrt(det) exactly.
  bool exact = false;
  QMatrix psi_bar;
  /// Normalized char-poly x^3 - c1 x^2 + c2 x - 1 with c1^3 = tr^3/det and
  /// c2^3 = e2^3/det^2 (these cubes are always rational).
  Scalar c1_cubed, c2_cubed;
};
/// Throws PreconditionError for degenerate Xi.
VolumeNormalization volume_normalize(const CurvaturePair& xi);

/// real-diagonalizable, complex-pair, jordan-2 or jordan-3; invariant under
/// positive and negative rescaling, so it applies to Psi+ before normalization.
std::string classify_nijenhuis(const QMatrix& psi);

/// Basis of h-invariant symmetric forms with g(Ju,Jv) = -g(u,v).
std::vector<QMatrix> invariant_metrics(const HomogeneousModel& model);
/// g(u,v) = <pi- u, pi+ v> symmetrized, where Delta- is identified with the
/// dual of Delta+ through Xi+ and the coordinate volume form on Delta+.
/// Throws PreconditionError for degenerate Xi+.
QMatrix canonical_metric(const HomogeneousModel& model);
/// Scaled so the first nonzero entry above the diagonal is 1.
QMatrix normalize_metric(const QMatrix& g);

/// Trilinear form T(x,y,z) at index (x*k + y)*k + z.
using Trilinear = std::vector<Scalar>;

/// Levi-Civita map Lambda(m_a) of a reductive model; throws PreconditionError
/// for a degenerate metric or a non-reductive model.
std::vector<QMatrix> nomizu_map(const HomogeneousModel& model, const QMatrix& g);
Trilinear nabla_omega(const HomogeneousModel& model, const QMatrix& g);
Trilinear d_omega(const HomogeneousModel& model, const QMatrix& omega);
/// strict (T totally skew and nonzero), non-strict (T = 0) or no.
std::string nearly_para_kahler(const HomogeneousModel& model, const QMatrix& g);
/// Alternation of nabla omega equals d omega / 3.
bool check_p_identity(const HomogeneousModel& model, const QMatrix& g);

QMatrix ricci(const HomogeneousModel& model, const QMatrix& g);
struct EinsteinVerdict {
  bool einstein = false;
  Scalar lambda;
};
EinsteinVerdict is_einstein(const HomogeneousModel& model, const QMatrix& g);

/// su(2)^3 / diagonal su(2), J(v,0) = (rv, tv), J(0,v) = ((1-r^2)/t v, -rv).
/// Throws std::invalid_argument for t = 0.
HomogeneousModel su2_cubed_model(const Scalar& r, const Scalar& t);
/// Limiting structures J(v1, v2) = (sign v1 + s v2, -sign v2), the t = 0 chart.
HomogeneousModel su2_cubed_limit_model(int sign, const Scalar& s);

/// integrable, degenerate-nonintegrable or nondegenerate (N surjective onto m).
std::string nijenhuis_verdict(const HomogeneousModel& model);
std::string nijenhuis_family_su2cubed(const Scalar& r, const Scalar& t);

}  // namespace parageom
