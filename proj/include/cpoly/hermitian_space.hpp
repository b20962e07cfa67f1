#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cpoly/tolerance.hpp"

namespace cpoly {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n);
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  // |v><v|
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t n() const { return n_; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(double s);

  Complex trace() const;
  ComplexMatrix adjoint() const;

  // max_{ij} |M_ij - conj(M_ji)|
  double hermiticity_defect() const;
  bool all_finite() const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, double s);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(AB) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// A Hermitian matrix of unit trace, validated on construction.
class HermitianUnitTrace {
 public:
  explicit HermitianUnitTrace(ComplexMatrix m, double tol = kDefaultTolerances.structural);

  static HermitianUnitTrace maximally_mixed(std::size_t n);
  static HermitianUnitTrace projector(std::span<const Complex> unit_vector);

  std::size_t n() const { return m_.n(); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

// Orthonormal traceless Hermitian basis: (1/2) Tr(G_i G_j) = delta_ij.
class TracelessBasis {
 public:
  std::size_t n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const ComplexMatrix> elements() const { return elements_; }

 private:
  friend TracelessBasis make_traceless_basis(std::size_t n);
  std::size_t n_ = 0;
  std::vector<ComplexMatrix> elements_;
};

// Generalized Gell-Mann family in canonical order: symmetric off-diagonal
// pairs (j<k, row-major), then antisymmetric pairs, then the n-1 diagonals.
TracelessBasis make_traceless_basis(std::size_t n);

struct BlochVector {
  std::size_t n = 0;
  std::vector<double> coords;  // length n*n - 1

  double norm() const;
  double norm_squared() const;
};

double dot(const BlochVector& a, const BlochVector& b);
double euclidean_distance(const BlochVector& a, const BlochVector& b);
BlochVector operator+(BlochVector a, const BlochVector& b);
BlochVector operator-(BlochVector a, const BlochVector& b);
BlochVector operator*(BlochVector a, double s);

// Coordinates (1/2) Tr(M G_i). Accepts any matrix with the basis dimension;
// for a unit-trace Hermitian input the result is its Bloch vector.
BlochVector to_bloch(const ComplexMatrix& m, const TracelessBasis& basis);
BlochVector to_bloch(const HermitianUnitTrace& m, const TracelessBasis& basis);
// (1/n) 1l + sum_i x_i G_i
HermitianUnitTrace from_bloch(const BlochVector& x, const TracelessBasis& basis);

// sqrt((1/2) Tr (A-B)^2)
double distance(const HermitianUnitTrace& a, const HermitianUnitTrace& b);
// (1/2) [Tr AB - 1/n]
double inner(const HermitianUnitTrace& a, const HermitianUnitTrace& b);

// Descending eigenvalues by cyclic Jacobi rotations. Throws on non-Hermitian
// input.
std::vector<double> eigenvalues(const ComplexMatrix& m, double hermitian_tol = 1e-10);
std::vector<double> eigenvalues(const HermitianUnitTrace& m);

bool is_density_matrix(const HermitianUnitTrace& m, double tol);

}  // namespace cpoly
