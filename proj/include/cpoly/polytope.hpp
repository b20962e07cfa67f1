#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpoly/hermitian_space.hpp"
#include "cpoly/mub.hpp"

namespace cpoly {

// The complementarity polytope: N+1 mutually orthogonal regular (N-1)-simplices
// ("P-simplices") of N corners each, centered at rho* = 1l/N. Corner (l, k) is
// corner k of simplex l. A realized polytope also carries the projector
// matrix behind every corner.
class CPolytope {
 public:
  CPolytope(std::size_t n, std::vector<std::vector<BlochVector>> corners,
            std::optional<std::vector<std::vector<ComplexMatrix>>> projectors = std::nullopt);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return n_ * n_ - 1; }
  std::size_t simplex_count() const { return n_ + 1; }
  std::size_t corner_count() const { return n_ * (n_ + 1); }

  const BlochVector& corner(std::size_t l, std::size_t k) const { return corners_[l][k]; }
  // Flat corner index l*N + k.
  const BlochVector& corner(std::size_t flat) const { return corners_[flat / n_][flat % n_]; }

  bool realized() const { return projectors_.has_value(); }
  const ComplexMatrix& projector(std::size_t l, std::size_t k) const { return (*projectors_)[l][k]; }

 private:
  std::size_t n_;
  std::vector<std::vector<BlochVector>> corners_;
  std::optional<std::vector<std::vector<ComplexMatrix>>> projectors_;
};

// One corner index per P-simplex.
struct PointFace {
  std::vector<std::size_t> selection;

  friend bool operator==(const PointFace&, const PointFace&) = default;
};

struct FaceOperator {
  BlochVector bloch;                  // a = sum_l c_{l, sigma_l}
  std::optional<ComplexMatrix> matrix;  // A = sum P - 1l, when realized
};

struct GramReport {
  bool pass = false;
  double max_deviation = 0.0;
  double max_simplex_sum = 0.0;  // max |sum_k c_{l,k}| over simplices
  // Corner pair with the worst Gram deviation, flat indices.
  std::size_t witness_a = 0;
  std::size_t witness_b = 0;
};

// Expected Gram entry between two corners.
double expected_gram(std::size_t n, std::size_t flat_a, std::size_t flat_b);
std::vector<double> gram_matrix(const CPolytope& p);
GramReport check_gram(const CPolytope& p, double tol);

// Canonical corners in blocks of N-1 coordinates per simplex:
//   corner 0 = (-r_1, ..., -r_{N-1}),
//   corner j = (0, ..., 0, R_j, -r_{j+1}, ..., -r_{N-1}),
// r_m = 1/sqrt(2m(m+1)), R_m = m r_m.
CPolytope build_abstract(std::size_t n);
// Bloch vectors of the MUB projectors. Throws InvalidInput for an incomplete
// or failing set.
CPolytope build_from_mub(const MubSet& set, const TracelessBasis& basis);

std::uint64_t point_face_count(std::size_t n);
// Mixed-radix decoding, simplex 0 is the least significant digit.
PointFace point_face_from_index(std::size_t n, std::uint64_t index);
std::uint64_t point_face_index(std::size_t n, const PointFace& face);
void validate_point_face(std::size_t n, const PointFace& face);
std::size_t shared_corners(const PointFace& a, const PointFace& b);

FaceOperator face_operator(const CPolytope& p, const PointFace& face);

// Tr(rho A_sigma) = 2 <x, a_sigma> + 1/N in Bloch form.
double face_value(const BlochVector& x, const PointFace& face, const CPolytope& p);
// Uses matrices when p is realized, the canonical chart otherwise.
double face_value(const HermitianUnitTrace& rho, const PointFace& face, const CPolytope& p);

inline constexpr double kMembershipTolerance = 1e-12;

// Intersection of the N^{N+1} point-face half-spaces Tr(rho A) >= 0. The
// minimum over faces separates per simplex, so this evaluates
// 2 sum_l min_k <x, c_{l,k}> + 1/N without enumerating faces.
double min_face_value(const BlochVector& x, const CPolytope& p);
bool membership(const BlochVector& x, const CPolytope& p, double tol = kMembershipTolerance);
bool membership(const HermitianUnitTrace& rho, const CPolytope& p, double tol = kMembershipTolerance);

// A positive quantity kept as its natural log, with the double value when it
// is representable.
struct LogValue {
  double log = 0.0;
  std::optional<double> value;

  static LogValue from_log(double log_value);
};

struct GeometryReport {
  std::size_t n = 0;
  LogValue v_polytope;
  LogValue v_body;
  LogValue ratio;
  double r_in = 0.0;
  double r_body = 0.0;   // insphere radius of the density body
  double r_out = 0.0;    // common outsphere radius
  LogValue area;
  double ra_over_v_polytope = 0.0;
  double ra_over_v_body = 0.0;
};

GeometryReport geometry_report(std::size_t n);

enum class VolumeMode { ConeDeterminant, MonteCarlo };

struct VolumeEstimate {
  VolumeMode mode = VolumeMode::ConeDeterminant;
  double value = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  std::uint64_t seed = 0;
};

// Cone mode (n <= 4): N^{N+1} |det| / (N^2-1)! of the vectors spanning one
// facet cone. Monte-Carlo mode (n <= 3): hit fraction of uniform samples in
// the outsphere ball.
VolumeEstimate volume_oracle(std::size_t n, VolumeMode mode, std::uint64_t samples = 0,
                             std::uint64_t seed = 0, unsigned threads = 0);

double ball_volume(std::size_t dim, double radius);

}  // namespace cpoly
