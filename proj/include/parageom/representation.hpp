#pragma once

#include "parageom/lie_algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace parageom {

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Action of a Lie algebra by one matrix per basis element (column
/// convention: rho(x)(i,j) is the coefficient of v_i in x.v_j).
class Representation {
 public:
  Representation() = default;
  /// Checks the homomorphism property; throws std::invalid_argument naming
  /// the first failing bracket.
  Representation(AlgebraPtr algebra, std::vector<PMatrix> action);
  Representation(AlgebraPtr algebra, const std::vector<QMatrix>& action);
  /// Skips the homomorphism check (used by functors of valid inputs).
  static Representation unchecked(AlgebraPtr algebra, std::vector<PMatrix> action);

  const LieAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  std::size_t dim() const { return dim_; }
  const PMatrix& action(std::size_t i) const { return act_[i]; }
  /// Numeric action; throws ParametricError if parametric.
  const QMatrix& scalar_action(std::size_t i) const;
  QMatrix scalar_action(const Vector& x) const;
  bool is_scalar() const { return scalar_; }

  /// rho([b_i,b_j]) - [rho_i, rho_j] entries that do not vanish.
  std::vector<std::string> homomorphism_defect() const;

  Representation substitute(const std::map<std::string, Scalar>& values) const;

 private:
  AlgebraPtr alg_;
  std::size_t dim_ = 0;
  std::vector<PMatrix> act_;
  std::vector<QMatrix> qact_;
  bool scalar_ = false;
};

AlgebraPtr share(LieAlgebra L);

Representation trivial(const AlgebraPtr& alg, std::size_t n);
Representation adjoint(const AlgebraPtr& alg);

Representation dual(const Representation& r);
Representation tensor(const Representation& a, const Representation& b);
/// Hom(a, b) = a* (x) b; a map M (dim b x dim a) sits at index i*dim(a)+j for M(i,j).
Representation hom(const Representation& a, const Representation& b);
/// Basis: increasing index tuples in lexicographic order.
Representation exterior(const Representation& r, std::size_t p);
Representation sym2(const Representation& r);
Representation direct_sum(const Representation& a, const Representation& b);
/// Restriction to a subalgebra of r's algebra (the induced algebra is built
/// from sub's span).
Representation restrict(const Representation& r, const Subalgebra& sub, std::vector<std::string> names = {});

/// Index tuples used by exterior(r, p).
std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t p);

/// Joint kernel of all action matrices.
std::vector<Vector> invariants(const Representation& r);
/// Basis of Hom_h(a, b) as (dim b x dim a) matrices.
std::vector<QMatrix> equivariant_maps(const Representation& a, const Representation& b);

struct InvariantLines {
  /// "finite", "all" (every line is invariant), "infinite" or "undecided".
  std::string status;
  std::vector<Vector> lines;  // when finite; each normalized with leading entry 1
  std::string detail;
};
/// Lines fixed by every action matrix, via Gröbner bases on projective charts.
InvariantLines invariant_lines(const Representation& r);

}  // namespace parageom
