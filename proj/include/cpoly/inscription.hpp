#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpoly/designs.hpp"
#include "cpoly/polytope.hpp"

namespace cpoly {

// N x N array of point faces; face (r, c) has flat index r*N + c.
struct PointFaceArray {
  std::size_t n = 0;
  std::vector<PointFace> faces;

  const PointFace& at(std::size_t r, std::size_t c) const { return faces[r * n + c]; }
};

// sigma(r, c) = (c, r, S_1[r][c], ..., S_{N-1}[r][c]). Throws InvalidInput
// when the MOLS count is wrong or two faces do not share exactly one corner
// (the message names the pair).
PointFaceArray build_point_face_array(std::size_t n, const MolsSet& mols);

struct SharedCornerReport {
  bool pass = false;
  std::size_t face_a = 0;
  std::size_t face_b = 0;
  std::size_t shared = 0;
};

// Every pair of distinct faces shares exactly one corner.
SharedCornerReport check_shared_corners(const std::vector<PointFace>& faces);

struct ASimplexReport {
  bool pass = false;
  bool used_matrices = false;
  std::size_t n = 0;
  double max_diagonal_deviation = 0.0;   // max |Tr A_a^2 - N|
  double max_off_diagonal = 0.0;         // max |Tr A_a A_b|, a != b
  std::size_t witness_a = 0;             // worst off-diagonal pair
  std::size_t witness_b = 0;
  double witness_value = 0.0;
  // N^2 unit-trace operators that are pairwise orthogonal under the trace
  // form span the Hermitian matrices.
  bool complete_orthogonal_basis = false;
  std::vector<double> gram;              // faces x faces, Tr A_a A_b
};

// Tr A_a A_b from the matrices when realized, otherwise 2<a_a, a_b> + 1/N.
ASimplexReport verify_asimplex(const CPolytope& p, const std::vector<PointFace>& faces, double tol);
ASimplexReport verify_asimplex(const CPolytope& p, const PointFaceArray& arr, double tol);

struct InscriptionSearchResult {
  std::size_t n = 0;
  std::uint64_t solutions = 0;
  // Every solution as sorted point-face indices.
  std::vector<std::vector<std::uint64_t>> families;
  std::optional<std::vector<PointFace>> witness;
  bool geometry_agrees = false;  // first witness passes verify_asimplex
  std::optional<ASimplexReport> witness_report;
};

inline constexpr std::size_t kMaxInscriptionSearchOrder = 3;

// All families of N^2 point faces with pairwise exactly one shared corner, by
// backtracking over increasing face indices. The witness is then checked
// against the geometry of p.
InscriptionSearchResult exhaustive_inscription_search(std::size_t n, const CPolytope& p, double tol);
InscriptionSearchResult exhaustive_inscription_search(std::size_t n, double tol);

// Points = faces, lines = corners (corner (l, k) is line k of pencil l).
AffinePlane plane_dictionary(const PointFaceArray& arr);

// Faces of the array containing both corners.
std::vector<std::size_t> faces_through(const PointFaceArray& arr, std::size_t l1, std::size_t k1,
                                       std::size_t l2, std::size_t k2);

// Same set of lines, ignoring line and pencil order.
bool same_incidence(const AffinePlane& a, const AffinePlane& b);

}  // namespace cpoly
