#pragma once

#include "parageom/poly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace parageom {

/// Monomial order over an explicit variable priority list (first = largest).
/// Variables met in the input but missing from the list are appended in
/// alphabetical order. `block` > 0 selects an elimination order: the first
/// `block` variables are compared by grevlex first, the rest break ties by
/// grevlex.
struct MonomialOrder {
  enum class Kind { grevlex, lex, block };
  Kind kind = Kind::grevlex;
  std::vector<std::string> vars;
  std::size_t block = 0;

  static MonomialOrder grevlex(std::vector<std::string> vars = {}) { return {Kind::grevlex, std::move(vars), 0}; }
  static MonomialOrder lex(std::vector<std::string> vars) { return {Kind::lex, std::move(vars), 0}; }
  /// Eliminates `first` (all larger than any monomial free of them).
  static MonomialOrder elimination(std::vector<std::string> first, const std::vector<std::string>& rest);
};

struct GroebnerLimits {
  std::size_t max_basis = 400;
  unsigned max_degree = 24;
  std::size_t max_terms = 200000;  // summed over the working basis
  std::size_t max_pairs = 200000;  // S-pairs processed
};

/// Defaults, with max_terms scaled from PARAGEOM_CAP_MB when set.
GroebnerLimits default_limits();

/// Reduced, monic Gröbner basis sorted by decreasing leading monomial.
/// Throws ResourceError naming the exceeded cap.
std::vector<Poly> buchberger(const std::vector<Poly>& generators, const MonomialOrder& order = MonomialOrder::grevlex(),
                             const GroebnerLimits& limits = default_limits());

/// Normal form of p by multivariate division.
Poly reduce(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order = MonomialOrder::grevlex());

/// Leading monomial of p under order (p nonzero).
Monomial leading_monomial(const Poly& p, const MonomialOrder& order);

/// S-polynomial of f and g.
Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

/// True if every element of a reduces to zero modulo a Gröbner basis of b and vice versa.
bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b, const MonomialOrder& order = MonomialOrder::grevlex(),
                const GroebnerLimits& limits = default_limits());

bool is_unit_ideal(const std::vector<Poly>& basis);

/// Gröbner basis of the elimination ideal  <gens> ∩ Q[vars not in `eliminate`].
std::vector<Poly> eliminate(const std::vector<Poly>& gens, const std::vector<std::string>& eliminate_vars,
                            const GroebnerLimits& limits = default_limits());

/// Saturation  <gens> : f^∞  via an auxiliary variable.
std::vector<Poly> saturate(const std::vector<Poly>& gens, const Poly& f, const GroebnerLimits& limits = default_limits());

}  // namespace parageom
