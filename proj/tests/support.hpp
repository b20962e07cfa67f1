#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cpoly/hermitian_space.hpp"

namespace testing {

using cpoly::Complex;
using cpoly::ComplexMatrix;

// Fixed-seed generators so failures replay.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240531);
  return gen;
}

inline double gaussian() {
  static std::normal_distribution<double> d(0.0, 1.0);
  return d(rng());
}

inline std::size_t uniform_index(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng());
}

inline std::vector<Complex> random_unit_vector(std::size_t n) {
  std::vector<Complex> v(n);
  double norm2 = 0.0;
  for (auto& z : v) {
    z = Complex(gaussian(), gaussian());
    norm2 += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm2);
  return v;
}

// Random Hermitian matrix with unit trace (not necessarily positive).
inline ComplexMatrix random_hermitian_unit_trace(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = gaussian();
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = Complex(gaussian(), gaussian());
      m(c, r) = std::conj(m(r, c));
    }
  }
  const double shift = (1.0 - m.trace().real()) / static_cast<double>(n);
  for (std::size_t r = 0; r < n; ++r) m(r, r) += shift;
  return m;
}

// Random density matrix: a mixture of random pure states.
inline ComplexMatrix random_density(std::size_t n, std::size_t terms = 3) {
  ComplexMatrix m(n);
  std::vector<double> w(terms);
  double total = 0.0;
  for (auto& x : w) total += (x = std::abs(gaussian()) + 0.05);
  for (std::size_t t = 0; t < terms; ++t) m += ComplexMatrix::outer(random_unit_vector(n)) * (w[t] / total);
  return m;
}

// Haar-ish unitary from Gram-Schmidt on Gaussian columns.
inline ComplexMatrix random_unitary(std::size_t n) {
  std::vector<std::vector<Complex>> cols;
  while (cols.size() < n) {
    std::vector<Complex> v(n);
    for (auto& z : v) z = Complex(gaussian(), gaussian());
    for (const auto& u : cols) {
      Complex ip = 0.0;
      for (std::size_t i = 0; i < n; ++i) ip += std::conj(u[i]) * v[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= ip * u[i];
    }
    double norm2 = 0.0;
    for (const auto& z : v) norm2 += std::norm(z);
    for (auto& z : v) z /= std::sqrt(norm2);
    cols.push_back(std::move(v));
  }
  ComplexMatrix u(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) u(r, c) = cols[c][r];
  return u;
}

inline std::vector<Complex> apply(const ComplexMatrix& u, const std::vector<Complex>& v) {
  std::vector<Complex> out(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += u(r, c) * v[c];
  return out;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.n(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

}  // namespace testing
