#include "doctest.h"

#include <cmath>

#include "cpoly/error.hpp"
#include "cpoly/hermitian_space.hpp"
#include "cpoly/mub.hpp"
#include "support.hpp"

using namespace cpoly;

namespace {

ComplexMatrix diag(std::vector<double> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// (1/2) Tr (A-B)^2 computed from the product, not from the chart.
double direct_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix d = a - b;
  return std::sqrt(0.5 * (d * d).trace().real());
}

}  // namespace

TEST_CASE("traceless basis is orthonormal and traceless") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto basis = make_traceless_basis(n);
    REQUIRE(basis.size() == n * n - 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(std::abs(basis[i].trace()) < 1e-12);
      CHECK(basis[i].hermiticity_defect() < 1e-12);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Complex ip = 0.5 * (basis[i] * basis[j]).trace();
        CHECK(std::abs(ip - Complex(i == j ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("n=2 basis is the Pauli triple up to order") {
  const auto b = make_traceless_basis(2);
  const Complex i(0.0, 1.0);
  const ComplexMatrix sx(2, {0, 1, 1, 0});
  const ComplexMatrix sy(2, {0, -i, i, 0});
  const ComplexMatrix sz(2, {1, 0, 0, -1});
  CHECK(testing::max_abs_diff(b[0], sx) < 1e-15);
  CHECK(testing::max_abs_diff(b[1], sy) < 1e-15);
  CHECK(testing::max_abs_diff(b[2], sz) < 1e-15);
}

TEST_CASE("basis construction rejects n < 2") {
  CHECK_THROWS_AS(make_traceless_basis(1), InvalidDimension);
  CHECK_THROWS_AS(make_traceless_basis(0), InvalidDimension);
}

TEST_CASE("HermitianUnitTrace validates its input") {
  CHECK_THROWS_AS(HermitianUnitTrace(diag({0.5, 0.6})), InvalidInput);
  ComplexMatrix m = diag({0.5, 0.5});
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(HermitianUnitTrace{m}, InvalidInput);
  m(1, 0) = 0.1;
  CHECK_NOTHROW(HermitianUnitTrace{m});
}

TEST_CASE("Bloch round trip and origin") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto basis = make_traceless_basis(n);
    CHECK(to_bloch(HermitianUnitTrace::maximally_mixed(n), basis).norm() < 1e-15);
    for (int t = 0; t < 20; ++t) {
      const HermitianUnitTrace m(testing::random_hermitian_unit_trace(n));
      const auto back = from_bloch(to_bloch(m, basis), basis);
      CHECK(testing::max_abs_diff(back.matrix(), m.matrix()) < 1e-12);
    }
  }
}

TEST_CASE("pure state sits on the outsphere") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto basis = make_traceless_basis(n);
    std::vector<Complex> e0(n, 0.0);
    e0[0] = 1.0;
    const auto x = to_bloch(HermitianUnitTrace::projector(e0), basis);
    CHECK(x.norm() == doctest::Approx(std::sqrt((n - 1.0) / (2.0 * n))).epsilon(1e-14));
    const auto y = to_bloch(HermitianUnitTrace::projector(testing::random_unit_vector(n)), basis);
    CHECK(y.norm() == doctest::Approx(std::sqrt((n - 1.0) / (2.0 * n))).epsilon(1e-12));
  }
  const auto b2 = make_traceless_basis(2);
  const std::vector<Complex> e0{1.0, 0.0};
  CHECK(std::abs(to_bloch(HermitianUnitTrace::projector(e0), b2).norm() - 0.5) < 1e-15);
}

TEST_CASE("distance examples") {
  const auto a = HermitianUnitTrace::projector(std::vector<Complex>{1.0, 0.0, 0.0});
  const auto b = HermitianUnitTrace::projector(std::vector<Complex>{0.0, 1.0, 0.0});
  CHECK(distance(a, a) == 0.0);
  CHECK(std::abs(distance(a, b) - 1.0) < 1e-15);
  CHECK(std::abs(distance(HermitianUnitTrace::maximally_mixed(3), a) - std::sqrt(1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(distance(HermitianUnitTrace::maximally_mixed(3), a) - 0.577350) < 1e-6);
}

TEST_CASE("inner product examples") {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<Complex> e0(n, 0.0), e1(n, 0.0), f(n, 1.0 / std::sqrt(double(n)));
    e0[0] = 1.0;
    e1[1] = 1.0;
    const auto p0 = HermitianUnitTrace::projector(e0);
    const auto p1 = HermitianUnitTrace::projector(e1);
    const auto pf = HermitianUnitTrace::projector(f);
    CHECK(std::abs(inner(p0, pf)) < 1e-15);
    CHECK(std::abs(inner(p0, p0) - (n - 1.0) / (2.0 * n)) < 1e-15);
    CHECK(std::abs(inner(p0, p1) + 1.0 / (2.0 * n)) < 1e-15);
  }
}

TEST_CASE("metric agrees with the chart on random pairs") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto basis = make_traceless_basis(n);
    for (int t = 0; t < 30; ++t) {
      const HermitianUnitTrace a(testing::random_hermitian_unit_trace(n));
      const HermitianUnitTrace b(testing::random_hermitian_unit_trace(n));
      const auto xa = to_bloch(a, basis), xb = to_bloch(b, basis);
      const double d = direct_distance(a.matrix(), b.matrix());
      CHECK(std::abs(distance(a, b) - d) < 1e-12 * std::max(1.0, d));
      CHECK(std::abs(euclidean_distance(xa, xb) - d) < 1e-12 * std::max(1.0, d));
      CHECK(std::abs(inner(a, b) - dot(xa, xb)) < 1e-12 * std::max(1.0, std::abs(dot(xa, xb))));
      CHECK(distance(a, b) == doctest::Approx(distance(b, a)).epsilon(1e-14));
    }
  }
}

TEST_CASE("polarization identity at the origin") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto rho = HermitianUnitTrace::maximally_mixed(n);
    for (int t = 0; t < 30; ++t) {
      const HermitianUnitTrace a(testing::random_hermitian_unit_trace(n));
      const HermitianUnitTrace b(testing::random_hermitian_unit_trace(n));
      const HermitianUnitTrace plus(a.matrix() + b.matrix() - rho.matrix());
      const HermitianUnitTrace minus(a.matrix() - b.matrix() + rho.matrix());
      const double dp = distance(plus, rho), dm = distance(minus, rho);
      const double rhs = 0.25 * (dp * dp - dm * dm);
      CHECK(std::abs(inner(a, b) - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("eigenvalue examples") {
  const auto mixed = eigenvalues(HermitianUnitTrace::maximally_mixed(3));
  REQUIRE(mixed.size() == 3);
  for (double v : mixed) CHECK(std::abs(v - 1.0 / 3.0) < 1e-14);

  const auto pure = eigenvalues(HermitianUnitTrace::projector(testing::random_unit_vector(4)));
  REQUIRE(pure.size() == 4);
  CHECK(std::abs(pure[0] - 1.0) < 1e-12);
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(pure[i]) < 1e-12);
}

TEST_CASE("eigenvalues of 2x2 match the closed form") {
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix m = testing::random_hermitian_unit_trace(2);
    const double a = m(0, 0).real(), d = m(1, 1).real();
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    const auto ev = eigenvalues(m);
    CHECK(std::abs(ev[0] - (0.5 * (a + d) + disc)) < 1e-12);
    CHECK(std::abs(ev[1] - (0.5 * (a + d) - disc)) < 1e-12);
  }
}

TEST_CASE("spectral sum rules on random Hermitian matrices") {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int t = 0; t < 10; ++t) {
      const ComplexMatrix m = testing::random_hermitian_unit_trace(n);
      const auto ev = eigenvalues(m);
      REQUIRE(ev.size() == n);
      for (std::size_t i = 1; i < n; ++i) CHECK(ev[i - 1] >= ev[i]);
      double s1 = 0, s2 = 0, s3 = 0;
      for (double v : ev) {
        s1 += v;
        s2 += v * v;
        s3 += v * v * v;
      }
      const ComplexMatrix m2 = m * m;
      const double t2 = m2.trace().real();
      const double t3 = (m2 * m).trace().real();
      CHECK(std::abs(s1 - 1.0) < 1e-10);
      CHECK(std::abs(s2 - t2) < 1e-10 * std::max(1.0, t2));
      CHECK(std::abs(s3 - t3) < 1e-9 * std::max(1.0, std::abs(t3)));
    }
  }
}

TEST_CASE("octahedron face operator has one negative eigenvalue") {
  const MubSet set = build_complete(2);
  ComplexMatrix a = ComplexMatrix::identity(2) * -1.0;
  for (const auto& b : set.bases) a += ComplexMatrix::outer(b.vectors[0]);
  const auto ev = eigenvalues(a);
  CHECK(std::abs(ev[0] + ev[1] - 1.0) < 1e-10);
  CHECK(std::abs(ev[0] * ev[0] + ev[1] * ev[1] - 2.0) < 1e-10);
  CHECK(std::abs(ev[0] - (1.0 + std::sqrt(3.0)) / 2.0) < 1e-12);
  CHECK(std::abs(ev[1] - (1.0 - std::sqrt(3.0)) / 2.0) < 1e-12);
  CHECK_FALSE(is_density_matrix(HermitianUnitTrace(a), 1e-9));
}

TEST_CASE("non-Hermitian input is rejected by eigenvalues") {
  ComplexMatrix m = diag({0.5, 0.5});
  m(0, 1) = 0.3;
  CHECK_THROWS_AS(eigenvalues(m), InvalidInput);
}

TEST_CASE("density matrix predicate") {
  CHECK(is_density_matrix(HermitianUnitTrace::maximally_mixed(4), 1e-12));
  CHECK(is_density_matrix(HermitianUnitTrace::projector(testing::random_unit_vector(3)), 1e-10));
  CHECK(is_density_matrix(HermitianUnitTrace(testing::random_density(5)), 1e-10));
  CHECK_FALSE(is_density_matrix(HermitianUnitTrace(diag({1.2, -0.2})), 1e-9));
}

TEST_CASE("dimension mismatches throw") {
  const auto b2 = make_traceless_basis(2);
  const auto rho3 = HermitianUnitTrace::maximally_mixed(3);
  CHECK_THROWS_AS(to_bloch(rho3, b2), DimensionMismatch);
  CHECK_THROWS_AS(distance(rho3, HermitianUnitTrace::maximally_mixed(2)), DimensionMismatch);
  CHECK_THROWS_AS(inner(rho3, HermitianUnitTrace::maximally_mixed(2)), DimensionMismatch);
  BlochVector x{3, std::vector<double>(3, 0.0)};
  CHECK_THROWS_AS(from_bloch(x, b2), DimensionMismatch);
}
