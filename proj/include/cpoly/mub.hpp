#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cpoly/hermitian_space.hpp"

namespace cpoly {

using StateVector = std::vector<Complex>;

struct Basis {
  std::vector<StateVector> vectors;
};

struct MubSet {
  std::size_t n = 0;
  std::vector<Basis> bases;

  bool complete() const { return bases.size() == n + 1; }
};

struct MubReport {
  bool pass = false;
  double tol = 0.0;
  double max_orthonormality_violation = 0.0;
  double max_unbiasedness_violation = 0.0;
  // Worst unbiasedness witness: (basis_a, vector_i, basis_b, vector_j).
  std::size_t witness[4] = {0, 0, 0, 0};
  std::size_t cross_pairs_checked = 0;
};

// Complete set of n+1 MUBs for prime-power n: standard basis first, then one
// basis per field element a in canonical order, vector index b in canonical
// order. Throws UnsupportedDimension when n is not a prime power.
MubSet build_complete(std::size_t n);

// Throws InvalidInput on ragged input.
MubReport verify_mub(const MubSet& set, double tol);

// min_i p_i^{k_i} + 1 over the prime factorization of n.
std::size_t mub_lower_bound(std::size_t n);

// "6 = 2·3" style rendering of the factorization.
std::string factorization_string(std::size_t n);

// Projector |v><v| for every vector, grouped by basis.
std::vector<std::vector<ComplexMatrix>> projectors(const MubSet& set);

}  // namespace cpoly
