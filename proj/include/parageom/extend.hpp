#pragma once

#include "parageom/cohomology.hpp"
#include "parageom/groebner.hpp"

#include <map>
#include <string>
#include <vector>

namespace parageom {

/// phi in h* (x) m* (x) h: one (dim h x dim m) matrix per basis element of h,
/// phi(h_k, u_j) = sum_i phi[k](i, j) h_i.
struct Cocycle {
  std::vector<PMatrix> phi;
};

/// Element of h* (x) L2m* (x) X: one (dim X x #pairs) matrix per basis element
/// of h; column pair_index(i, j) holds the value on (u_i, u_j), i < j.
using PairCochain = std::vector<PMatrix>;

Cocycle zero_cocycle(const Representation& m);
/// Reshapes a degree-1 cochain with coefficients in hom(m, adjoint(h)).
Cocycle cocycle_from_cochain(const Cochain& c, std::size_t dim_h, std::size_t dim_m);
/// sum_k names[k] * reps[k].
Cocycle combine(const std::vector<Cocycle>& reps, const std::vector<std::string>& names);
Cocycle operator+(const Cocycle& a, const Cocycle& b);
Cocycle substitute(const Cocycle& c, const std::map<std::string, Poly>& values);
Cocycle substitute(const Cocycle& c, const std::map<std::string, Scalar>& values);

/// d_h A for A: m -> h, i.e. x -> [x, A(.)] - A(x .).
Cocycle coboundary(const Representation& m, const PMatrix& a);
/// Nonzero entries of d_h phi, as readable strings.
std::vector<std::string> cocycle_defect(const Representation& m, const Cocycle& phi);

/// Action of h on h (+) m: adjoint block, module block, phi off-diagonal.
/// Throws PreconditionError listing d_h phi components if phi is no cocycle.
Representation twisted_module(const Representation& m, const Cocycle& phi);

/// Values of phi(h_k, .) as maps m -> h.
PairCochain delta_op(const Representation& m, const Cocycle& phi);
/// d theta for theta: L2m -> X, X = m (target_is_h false) or h.
PairCochain differential(const Representation& m, const PMatrix& theta, bool target_is_h);
/// Throws PreconditionError unless delta_op(phi) = d theta_m.
PairCochain q_op(const Representation& m, const Cocycle& phi, const PMatrix& theta_m);
PairCochain q_sigma(const Representation& m, const PMatrix& sigma, const Cocycle& phi, const PMatrix& theta_m);
/// Throws PreconditionError unless nu is h-invariant.
PairCochain p_nu(const Representation& m, const PMatrix& nu, const Cocycle& phi);

/// Flattened coordinates in C^1(h, hom(L2m, X)): k*(dim X * #pairs) + a*#pairs + p.
PVector flatten(const PairCochain& c);
bool is_zero(const PairCochain& c);

struct ExtensionVerdict {
  /// The coboundary condition delta phi = d theta_m is solvable for some parameter values.
  bool step1 = false;
  /// Linear conditions on cocycle parameters from the coboundary condition (reduced echelon form).
  std::vector<Poly> linear_constraints;
  /// Pivot parameters solved in terms of the remaining ones.
  std::map<std::string, Poly> substitution;
  /// Particular theta_m with delta phi = d theta_m after substitution.
  PMatrix theta_m;
  /// Basis of (L2m* (x) m)^h, the nu of the image term.
  std::vector<QMatrix> nu_basis;
  /// Gröbner basis of the remaining parameter constraints from the image condition.
  std::vector<Poly> residual_ideal;
  bool satisfiable = false;
  std::string detail;
};

/// Coboundary condition: delta phi = d theta_m; image condition: Q phi + p_nu in
/// B^1 for some (theta_h, nu). phi may be affine in parameters.
ExtensionVerdict check_extension_constraints(const Representation& m, const Cocycle& phi,
                                             const GroebnerLimits& limits = default_limits());

struct BracketSpace {
  /// Equivariant maps L2m -> h (+) m, vertical ones (image in h) first.
  std::vector<QMatrix> basis;
  std::size_t horizontal = 0, vertical = 0;
};
/// target: a representation on h (+) m whose first dim h coordinates are h.
BracketSpace bracket_space(const Representation& m, const Representation& target);

struct ExtensionDatum {
  Representation m;
  std::vector<std::string> m_names;
  Cocycle phi;
  PMatrix theta_m;  // dim m x #pairs
  PMatrix theta_h;  // dim h x #pairs
};

/// Bracket on h (+) m: h bracket, x.u + phi(x, u), theta_m + theta_h.
LieAlgebra reconstruct(const ExtensionDatum& d);
/// theta (dim h+m x #pairs) read off an algebra's m-m brackets.
std::pair<PMatrix, PMatrix> split_brackets(const LieAlgebra& g, std::size_t dim_h);

/// Jacobi residuals whose three arguments lie in m (indices >= dim_h).
std::vector<Poly> lambda3_residuals(const LieAlgebra& g, std::size_t dim_h);

/// Linearly reduced (echelon in the monomial basis) generators.
std::vector<Poly> linear_span_basis(const std::vector<Poly>& polys);

}  // namespace parageom
