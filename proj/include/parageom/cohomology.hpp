#pragma once

#include "parageom/representation.hpp"

#include <vector>

namespace parageom {

/// Element of Λ^k h* ⊗ V in coordinates. Degree 1: index i*dimV + a for
/// phi(h_i)_a. Degree 2: index pair(i<j)*dimV + a.
struct Cochain {
  int degree = 0;
  std::size_t hdim = 0, vdim = 0;
  Vector coeffs;

  /// Value on h_i (degree 1).
  Vector at(std::size_t i) const;
  /// Value on (h_i, h_j) with antisymmetry (degree 2).
  Vector at(std::size_t i, std::size_t j) const;
};

/// Position of the pair i<j in lexicographic order of n-element pairs.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

/// Chevalley–Eilenberg differential d^k : C^k -> C^{k+1}, k in {0,1,2}.
SparseMatrix ce_differential(const Representation& r, int k);

struct CohomologyResult {
  std::size_t dim = 0;
  std::size_t cocycles = 0;    // dim ker d^1
  std::size_t coboundaries = 0;  // rank d^0
  /// Canonical complement of B^1 in Z^1 (reduced echelon against B^1).
  std::vector<Cochain> representatives;
};

/// H^1(h, V). Throws std::invalid_argument for other degrees.
CohomologyResult ce_cohomology(const Representation& r, int k = 1);

}  // namespace parageom
