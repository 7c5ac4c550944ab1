#pragma once

#include "parageom/extend.hpp"
#include "parageom/geometry.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace parageom {

/// Subalgebra h of sl3 (explicit 3x3 matrices) with m = V (+) V* restricted
/// to h: X acts by X on V and by -X^T on V*.
struct IsotropyCase {
  std::string name;
  Scalar l;  // only meaningful for s2-semidirect
  std::vector<std::string> h_names;
  std::vector<QMatrix> h_matrices;
  AlgebraPtr h;
  std::vector<std::string> m_names;
  Representation m;
};

/// sl3, p1, p2, p12, sl2-semidirect, sl2-semidirect-twisted, gl2, rzrt-neg,
/// rzrt-null, rzrt-pos, rz-b2-r, s2-semidirect.
std::vector<std::string> isotropy_case_names();
/// g2star, sp4-gl2, su2cubed, su2, borel-bound.
std::vector<std::string> geometry_case_names();
std::vector<std::string> case_names();
bool is_case(const std::string& name);

/// Throws std::invalid_argument for an unknown name.
IsotropyCase isotropy_case(const std::string& name, const Scalar& l = 0);

/// Hom(m, h) with h acting adjointly.
Representation hom_module(const IsotropyCase& c);

const std::vector<Scalar>& exceptional_l();
/// `count` distinct seeded rationals outside the exceptional set.
std::vector<Scalar> generic_l(std::uint64_t seed, std::size_t count);

/// Brackets from text "[x,y] = rhs; ..." where rhs is linear in the basis
/// names with polynomial coefficients in the remaining identifiers.
LieAlgebra from_bracket_list(const std::vector<std::string>& names, const std::string& text);

/// h (+) m with the module action, phi, and m-m brackets from text.
LieAlgebra extension_from_text(const IsotropyCase& c, const std::string& theta_text, const Cocycle& phi);
LieAlgebra extension_from_text(const IsotropyCase& c, const std::string& theta_text);

/// A stored bracket list of Lambda^2 m -> h (+) m.
struct BracketFamily {
  std::string case_name;
  Scalar l;
  std::string text;
  std::size_t horizontal = 0, vertical = 0;  // parameter counts by target
};
BracketFamily gl2_family();
BracketFamily sl2_untwisted_family();
BracketFamily sl2_twisted_family();
/// l in {0, -3/10, -3/4, -3/2, -1/2}.
BracketFamily s2_family(const Scalar& l);
std::vector<Scalar> s2_family_levels();

/// Parameter substitutions for the gl2 list.
std::map<std::string, Poly> gl2_nilpotent_a();
std::map<std::string, Poly> gl2_nilpotent_b();
/// Main family: a1 = a3 a2 / a4 handled separately (see gl2_main_a1).
std::map<std::string, Poly> gl2_main_family();
/// Numerator and denominator of a1 on the main family.
std::pair<Poly, Poly> gl2_main_a1();

Cocycle sl2_twisted_cocycle(const IsotropyCase& c);
std::vector<Poly> sl2_twisted_printed_basis();
std::map<std::string, Poly> sl2_twisted_printed_solution();

/// Six-parameter (c1..c6) cocycle for s2-semidirect at l = 3/2.
Cocycle l32_cocycle(const IsotropyCase& c);
/// Normalized l = 3/2 algebras: (c1, c2) = (0, 1) or (1, 0), parameter alpha.
LieAlgebra alpha_family(int c1, int c2);

/// g2* family with parameters alpha1, alpha2, beta on sl3 (+) V (+) V*.
LieAlgebra g2star_family();
std::map<std::string, Scalar> g2star_normalization();

HomogeneousModel g2star_model();
HomogeneousModel sp4_gl2_model();
HomogeneousModel su2_model();
/// Model for a geometry case; params: r, t for su2cubed.
HomogeneousModel geometry_model(const std::string& name, const std::map<std::string, Scalar>& params = {});

struct BorelBound {
  std::vector<std::size_t> dims;  // free, after a5 = 0, after a1 = 0
  bool bound_holds = false;       // final dim < 4
};
BorelBound borel_bound_case();

}  // namespace parageom
