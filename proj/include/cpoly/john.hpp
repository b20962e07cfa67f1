#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cpoly/hermitian_space.hpp"
#include "cpoly/mub.hpp"
#include "cpoly/polytope.hpp"

namespace cpoly {

// Contact points of an inscribed ball with a convex body, with weights.
struct TouchingSet {
  std::size_t n = 0;
  std::vector<BlochVector> points;
  std::vector<double> weights;
  // Matrix form of each point when it came from a density matrix.
  std::optional<std::vector<ComplexMatrix>> matrices;
};

// Validates equal norms (within tol) and positive weights.
void validate_touching_set(const TouchingSet& ts, double tol = kDefaultTolerances.spectral);

// Contact directions e_k^(l) = -c_{l,k}/(N-1); one point
// u = (1/(N+1)) sum_l e_{k_l}^(l) per point face (N^{N+1} of them), ordered by
// point-face index. Throws InvalidInput on a Gram violation.
TouchingSet polytope_touching_set(const CPolytope& p);

// e_k^(l) = -to_bloch(P_k^(l))/(N-1), the Bloch vector of (1l - P)/(N-1).
TouchingSet density_touching_set(const MubSet& set, const TracelessBasis& basis);

struct JohnReport {
  bool pass = false;
  double condition1_residual = 0.0;  // |sum c_i u_i|
  double condition2_residual = 0.0;  // max |S2 - lambda 1l|
  double lambda = 0.0;               // trace(S2) / dim
  // Largest entry of S2 coupling coordinates of different simplex blocks,
  // when block structure applies (dim = (N+1)(N-1)).
  double cross_block_max = 0.0;
};

// John's conditions: sum c_i u_i = 0 and sum c_i u_i u_i^T proportional to
// the identity. Throws InvalidInput for an empty set.
JohnReport verify_john(const TouchingSet& ts, double tol);

struct SicReport {
  bool pass = false;
  double max_overlap_deviation = 0.0;  // max ||<i|j>|^2 - 1/(N+1)|
  double max_norm_deviation = 0.0;
  std::size_t witness_i = 0;
  std::size_t witness_j = 0;
  std::optional<JohnReport> john;
  double povm_residual = 0.0;          // max |sum P_i - N 1l|
  bool povm = false;
};

// Throws InvalidInput for a wrong vector count or ragged vectors.
SicReport verify_sic(const std::vector<StateVector>& vectors, double tol);

}  // namespace cpoly
