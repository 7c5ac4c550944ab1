#pragma once

#include "parageom/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace parageom {

using PVector = std::vector<Poly>;

/// Finite-dimensional Lie algebra given by structure constants
/// [b_i, b_j] = sum_k c(i,j,k) b_k, with possibly polynomial entries.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Zero bracket on the given basis.
  explicit LieAlgebra(std::vector<std::string> basis_names);

  /// Sets [b_i, b_j] = value and [b_j, b_i] = -value.
  LieAlgebra& set(std::size_t i, std::size_t j, const PVector& value);
  /// Named form: set("h", "e", {{"e", 2}}).
  LieAlgebra& set(const std::string& a, const std::string& b, const std::map<std::string, Poly>& value);

  /// Structure constants from a list of linearly independent matrices closed
  /// under commutators; throws if the span is not closed.
  static LieAlgebra from_matrices(std::vector<std::string> names, const std::vector<QMatrix>& mats);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index(const std::string& name) const;
  const Poly& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
  bool is_scalar() const;
  /// Parameters appearing in the structure constants.
  std::vector<std::string> parameters() const;

  PVector bracket(const PVector& x, const PVector& y) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(b_i) in column convention: column j = [b_i, b_j].
  PMatrix ad(std::size_t i) const;
  QMatrix ad_scalar(std::size_t i) const;
  QMatrix ad_scalar(const Vector& x) const;

  LieAlgebra substitute(const std::map<std::string, Scalar>& values) const;
  LieAlgebra substitute(const std::map<std::string, Poly>& values) const;
  /// New basis f_a = sum_i P(i,a) b_i.
  LieAlgebra change_basis(const QMatrix& p, std::vector<std::string> new_names = {}) const;

  /// Every nonzero bracket as "[x,y] = ..." lines in basis order.
  std::vector<std::string> bracket_table() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.names_ == b.names_ && a.c_ == b.c_; }

 private:
  Poly& cref(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim() + j) * dim() + k]; }
  std::vector<std::string> names_;
  std::vector<Poly> c_;
};

/// Linearly independent span inside a parent algebra.
struct Subalgebra {
  LieAlgebra parent;
  std::vector<Vector> span;

  std::size_t dim() const { return span.size(); }
  /// The abstract algebra with structure constants in span coordinates.
  LieAlgebra induced(std::vector<std::string> names = {}) const;
  /// Coordinates of x in the span; throws if x is outside.
  Vector coordinates(const Vector& x) const;
  bool contains(const Vector& x) const;
};

struct JacobiResidual {
  std::size_t i, j, k, target;
  Poly value;
};

/// Coefficient of b_target in Jac(b_i,b_j,b_k) for i<j<k; only nonzero entries.
std::vector<JacobiResidual> jacobi_defect(const LieAlgebra& L);
bool is_lie_algebra(const LieAlgebra& L);

QMatrix killing_form(const LieAlgebra& L);
Scalar killing(const LieAlgebra& L, const Vector& x, const Vector& y);

/// Exact closure test; throws if the span is linearly dependent.
bool is_subalgebra(const LieAlgebra& parent, const std::vector<Vector>& span);
Subalgebra make_subalgebra(const LieAlgebra& parent, std::vector<Vector> span);
Subalgebra centralizer(const LieAlgebra& L, const Vector& x);
Subalgebra derived_subalgebra(const LieAlgebra& L);
/// Killing-orthogonal complement of the derived algebra.
Subalgebra radical(const LieAlgebra& L);
bool is_ideal(const LieAlgebra& L, const std::vector<Vector>& span);

/// Minimum of dim ker ad(x) over `samples` seeded random rational x.
std::size_t sampled_rank(const LieAlgebra& L, std::uint64_t seed = 1, int samples = 24);

struct Identification {
  std::string label;  // g2_split, sp4_R, sl3_R, other
  std::string note;   // e.g. local isomorphism remark
  std::size_t dim = 0;
  Inertia signature;
  std::size_t rank = 0;
};
/// Throws PreconditionError("not semisimple") for a degenerate Killing form.
Identification identify_simple(const LieAlgebra& L, std::uint64_t seed = 1);

/// Standard sl2 in the basis (e, f, h) with [h,e]=2e, [h,f]=-2f, [e,f]=h.
LieAlgebra sl2();
/// sl3 with basis E12,E13,E21,E23,E31,E32,H1=E11-E22,H2=E22-E33.
LieAlgebra sl3();
/// su(2) with [e1,e2]=e3 cyclic.
LieAlgebra su2();

/// Elementary 3x3 matrix E_ij (1-based indices).
QMatrix elementary(std::size_t n, std::size_t i, std::size_t j);

}  // namespace parageom
