#include "doctest.h"

#include <cmath>

#include "cpoly/error.hpp"
#include "cpoly/john.hpp"
#include "cpoly/mub.hpp"
#include "support.hpp"

using namespace cpoly;

namespace {

const double kPi = std::acos(-1.0);

// Pure qubit state with Bloch direction (x, y, z), |(x,y,z)| = 1.
StateVector qubit(double x, double y, double z) {
  const double theta = std::acos(z), phi = std::atan2(y, x);
  return {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
}

std::vector<StateVector> tetrahedron_sic() {
  const double s = 1.0 / std::sqrt(3.0);
  return {qubit(s, s, s), qubit(s, -s, -s), qubit(-s, s, -s), qubit(-s, -s, s)};
}

// Weyl-Heisenberg orbit of (0, 1, -1)/sqrt(2) in dimension 3.
std::vector<StateVector> hesse_sic() {
  const StateVector fid{0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
  std::vector<StateVector> out;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      StateVector v(3);
      for (std::size_t m = 0; m < 3; ++m) v[(m + a) % 3] = std::polar(1.0, 2 * kPi * double(b * m) / 3.0) * fid[m];
      out.push_back(v);
    }
  return out;
}

double overlap(const StateVector& a, const StateVector& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return std::norm(s);
}

}  // namespace

TEST_CASE("polytope touching set at n = 2") {
  const TouchingSet ts = polytope_touching_set(build_abstract(2));
  REQUIRE(ts.points.size() == 8);
  for (const auto& u : ts.points) CHECK(std::abs(u.norm() - 1.0 / std::sqrt(12.0)) < 1e-15);
  // Facet centers of the cross-polytope |x|+|y|+|z| <= 1/2.
  for (const auto& u : ts.points)
    for (double c : u.coords) CHECK(std::abs(std::abs(c) - 1.0 / 6.0) < 1e-15);
  const JohnReport r = verify_john(ts, 1e-12);
  CHECK(r.pass);
  CHECK(std::abs(r.lambda - 2.0 / 9.0) < 1e-14);
  CHECK(std::abs(r.lambda - 8 * (1.0 / 12.0) / 3) < 1e-14);
}

TEST_CASE("polytope touching points lie on their facets") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const CPolytope p = build_abstract(n);
    const TouchingSet ts = polytope_touching_set(p);
    REQUIRE(ts.points.size() == point_face_count(n));
    const double r_in = geometry_report(n).r_in;
    for (std::uint64_t i = 0; i < ts.points.size(); ++i) {
      CHECK(std::abs(ts.points[i].norm() - r_in) < 1e-12);
      CHECK(std::abs(face_value(ts.points[i], point_face_from_index(n, i), p)) < 1e-12);
      CHECK(std::abs(min_face_value(ts.points[i], p)) < 1e-12);
    }
  }
  const TouchingSet t3 = polytope_touching_set(build_abstract(3));
  CHECK(t3.points.size() == 81);
  CHECK(std::abs(t3.points.front().norm() - 1.0 / std::sqrt(48.0)) < 1e-12);
}

TEST_CASE("contact directions cancel per simplex") {
  for (std::size_t n : {2u, 3u, 5u}) {
    const CPolytope p = build_abstract(n);
    for (std::size_t l = 0; l <= n; ++l) {
      BlochVector s{n, std::vector<double>(p.dim(), 0.0)};
      for (std::size_t k = 0; k < n; ++k) s = s + p.corner(l, k) * (-1.0 / (n - 1.0));
      CHECK(s.norm() < 1e-14);
    }
  }
}

TEST_CASE("John's conditions for both bodies") {
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    CAPTURE(n);
    const JohnReport poly = verify_john(polytope_touching_set(build_abstract(n)), 1e-10);
    CHECK(poly.pass);
    CHECK(poly.cross_block_max < 1e-12);
    const TouchingSet dens = density_touching_set(build_complete(n), make_traceless_basis(n));
    CHECK(dens.points.size() == n * (n + 1));
    CHECK(verify_john(dens, 1e-10).pass);
    CHECK(verify_john(polytope_touching_set(build_from_mub(build_complete(n), make_traceless_basis(n))), 1e-10).pass);
  }
}

TEST_CASE("polytope second moment is isotropic with the expected constant") {
  // Each coordinate block carries N^N/(N+1)^2 copies of the simplex
  // second moment sum_k e e^T = (1/(N-1)^2) (1/2) 1l.
  for (std::size_t n : {2u, 3u, 4u}) {
    const double nn = static_cast<double>(n);
    const double expect = std::pow(nn, nn) / ((nn + 1) * (nn + 1)) * 0.5 / ((nn - 1) * (nn - 1));
    CHECK(std::abs(verify_john(polytope_touching_set(build_abstract(n)), 1e-10).lambda - expect) < 1e-10 * expect);
  }
}

TEST_CASE("density touching set") {
  const TouchingSet t3 = density_touching_set(build_complete(3), make_traceless_basis(3));
  REQUIRE(t3.points.size() == 12);
  REQUIRE(t3.matrices.has_value());
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(std::abs(t3.points[i].norm() - 1.0 / std::sqrt(12.0)) < 1e-10);
    const HermitianUnitTrace m((*t3.matrices)[i]);
    const auto ev = eigenvalues(m);
    CHECK(std::abs(ev.back()) < 1e-10);
    CHECK(std::abs(ev.front() - 0.5) < 1e-10);
    CHECK(is_density_matrix(m, 1e-10));
  }
  const TouchingSet t2 = density_touching_set(build_complete(2), make_traceless_basis(2));
  REQUIRE(t2.points.size() == 6);
  const CPolytope oct = build_from_mub(build_complete(2), make_traceless_basis(2));
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(std::abs(t2.points[l * 2 + k].norm() - 0.5) < 1e-12);
      CHECK(euclidean_distance(t2.points[l * 2 + k], oct.corner(l, k) * -1.0) < 1e-12);
    }
  MubSet partial = build_complete(3);
  partial.bases.pop_back();
  CHECK_THROWS_AS(density_touching_set(partial, make_traceless_basis(3)), InvalidInput);
}

TEST_CASE("weights rescale lambda but not the verdict") {
  for (std::size_t n : {2u, 3u}) {
    TouchingSet ts = polytope_touching_set(build_abstract(n));
    const JohnReport base = verify_john(ts, 1e-10);
    for (double c : {0.25, 3.7}) {
      TouchingSet scaled = ts;
      for (auto& w : scaled.weights) w *= c;
      const JohnReport r = verify_john(scaled, 1e-10);
      CHECK(r.pass == base.pass);
      CHECK(std::abs(r.lambda - c * base.lambda) < 1e-12);
    }
    // Dropping one point breaks both conditions.
    ts.points.pop_back();
    ts.weights.pop_back();
    const JohnReport broken = verify_john(ts, 1e-10);
    CHECK_FALSE(broken.pass);
    CHECK(broken.condition1_residual > 1e-3);
  }
}

TEST_CASE("a single point fails the balance condition") {
  TouchingSet ts{2, {BlochVector{2, {0.1, 0.2, 0.3}}}, {1.0}, std::nullopt};
  const JohnReport r = verify_john(ts, 1e-10);
  CHECK_FALSE(r.pass);
  CHECK(std::abs(r.condition1_residual - std::sqrt(0.14)) < 1e-14);
  CHECK_THROWS_AS(verify_john(TouchingSet{2, {}, {}, std::nullopt}, 1e-10), InvalidInput);
}

TEST_CASE("touching set validation") {
  TouchingSet off{2, {BlochVector{2, {0.1, 0, 0}}, BlochVector{2, {0.2, 0, 0}}}, {1.0, 1.0}, std::nullopt};
  CHECK_THROWS_AS(validate_touching_set(off), InvalidInput);
  TouchingSet neg{2, {BlochVector{2, {0.1, 0, 0}}, BlochVector{2, {-0.1, 0, 0}}}, {1.0, -1.0}, std::nullopt};
  CHECK_THROWS_AS(validate_touching_set(neg), InvalidInput);
  TouchingSet ok{2, {BlochVector{2, {0.1, 0, 0}}, BlochVector{2, {-0.1, 0, 0}}}, {1.0, 2.0}, std::nullopt};
  CHECK_NOTHROW(validate_touching_set(ok));
}

TEST_CASE("a corrupted polytope has no touching set") {
  const CPolytope good = build_abstract(3);
  std::vector<std::vector<BlochVector>> corners(4);
  for (std::size_t l = 0; l < 4; ++l)
    for (std::size_t k = 0; k < 3; ++k) corners[l].push_back(good.corner(l, k));
  corners[2][1] = corners[2][1] * 0.9;
  CHECK_THROWS_AS(polytope_touching_set(CPolytope(3, corners)), InvalidInput);
}

TEST_CASE("tetrahedron SIC") {
  const auto sic = tetrahedron_sic();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) CHECK(std::abs(overlap(sic[i], sic[j]) - 1.0 / 3.0) < 1e-12);
  const SicReport r = verify_sic(sic, 1e-12);
  CHECK(r.pass);
  CHECK(r.max_overlap_deviation < 1e-12);
  REQUIRE(r.john.has_value());
  CHECK(r.john->pass);
  CHECK(r.povm);
  // Bloch vectors of norm 1/2 in R^3.
  CHECK(std::abs(r.john->lambda - 4 * 0.25 / 3) < 1e-12);
}

TEST_CASE("order-3 Weyl-Heisenberg SIC") {
  const SicReport r = verify_sic(hesse_sic(), 1e-10);
  CHECK(r.pass);
  CHECK(r.max_overlap_deviation < 1e-12);
  CHECK(r.john->pass);
}

TEST_CASE("SIC verifier rejects wrong inputs") {
  const MubSet paulis = build_complete(2);
  std::vector<StateVector> oct;
  for (const auto& b : paulis.bases)
    for (const auto& v : b.vectors) oct.push_back(v);
  try {
    verify_sic(oct, 1e-10);
    FAIL("expected an exception");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("expected N² = 4 vectors") != std::string::npos);
  }

  std::vector<StateVector> padded;
  for (int copy = 0; copy < 2; ++copy)
    for (const auto& v : paulis.bases[0].vectors) padded.push_back(v);
  const SicReport r = verify_sic(padded, 1e-10);
  CHECK_FALSE(r.pass);
  CHECK(r.max_overlap_deviation > 0.3);
  CHECK(r.witness_i != r.witness_j);

  auto scaled = tetrahedron_sic();
  scaled[1][0] *= 2.0;
  CHECK_THROWS_AS(verify_sic(scaled, 1e-10), InvalidInput);
}
