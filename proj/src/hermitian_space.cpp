#include "cpoly/hermitian_space.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "cpoly/error.hpp"

namespace cpoly {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

constexpr double kJacobiOffDiagonalThreshold = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), entries_(n * n) {}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw InvalidInput("ComplexMatrix: expected " + std::to_string(n * n) + " entries, got " +
                       std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_dim(n_, o.n_, "matrix +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_dim(n_, o.n_, "matrix -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix a(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) a(c, r) = std::conj((*this)(r, c));
  return a;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = r; c < n_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.n(), b.n(), "matrix *");
  const std::size_t n = a.n();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.n(), b.n(), "trace_product");
  Complex t = 0.0;
  for (std::size_t r = 0; r < a.n(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c) t += a(r, c) * b(c, r);
  return t;
}

HermitianUnitTrace::HermitianUnitTrace(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (m_.n() == 0) throw InvalidDimension("HermitianUnitTrace: empty matrix");
  if (!m_.all_finite()) throw InvalidInput("HermitianUnitTrace: non-finite entry");
  if (double d = m_.hermiticity_defect(); d > tol) {
    throw InvalidInput("HermitianUnitTrace: matrix is not Hermitian (defect " + std::to_string(d) +
                       ")");
  }
  if (std::abs(m_.trace() - 1.0) > tol) {
    throw InvalidInput("HermitianUnitTrace: trace is not 1 (trace " +
                       std::to_string(m_.trace().real()) + ")");
  }
}

HermitianUnitTrace HermitianUnitTrace::maximally_mixed(std::size_t n) {
  return HermitianUnitTrace(ComplexMatrix::identity(n) * (1.0 / static_cast<double>(n)));
}

HermitianUnitTrace HermitianUnitTrace::projector(std::span<const Complex> unit_vector) {
  return HermitianUnitTrace(ComplexMatrix::outer(unit_vector));
}

TracelessBasis make_traceless_basis(std::size_t n) {
  if (n < 2) throw InvalidDimension("make_traceless_basis: n must be >= 2, got " + std::to_string(n));
  TracelessBasis basis;
  basis.n_ = n;
  basis.elements_.reserve(n * n - 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      ComplexMatrix g(n);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      basis.elements_.push_back(std::move(g));
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      ComplexMatrix g(n);
      g(j, k) = Complex(0.0, -1.0);
      g(k, j) = Complex(0.0, 1.0);
      basis.elements_.push_back(std::move(g));
    }
  for (std::size_t l = 1; l < n; ++l) {
    ComplexMatrix g(n);
    const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    for (std::size_t j = 0; j < l; ++j) g(j, j) = scale;
    g(l, l) = -scale * static_cast<double>(l);
    basis.elements_.push_back(std::move(g));
  }
  return basis;
}

double BlochVector::norm_squared() const {
  double s = 0.0;
  for (double x : coords) s += x * x;
  return s;
}

double BlochVector::norm() const { return std::sqrt(norm_squared()); }

double dot(const BlochVector& a, const BlochVector& b) {
  require_same_dim(a.coords.size(), b.coords.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

double euclidean_distance(const BlochVector& a, const BlochVector& b) { return (a - b).norm(); }

BlochVector operator+(BlochVector a, const BlochVector& b) {
  require_same_dim(a.coords.size(), b.coords.size(), "bloch +");
  for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
  return a;
}

BlochVector operator-(BlochVector a, const BlochVector& b) {
  require_same_dim(a.coords.size(), b.coords.size(), "bloch -");
  for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
  return a;
}

BlochVector operator*(BlochVector a, double s) {
  for (double& x : a.coords) x *= s;
  return a;
}

BlochVector to_bloch(const ComplexMatrix& m, const TracelessBasis& basis) {
  require_same_dim(m.n(), basis.n(), "to_bloch");
  BlochVector x{m.n(), std::vector<double>(basis.size())};
  for (std::size_t i = 0; i < basis.size(); ++i) x.coords[i] = 0.5 * trace_product(m, basis[i]).real();
  return x;
}

BlochVector to_bloch(const HermitianUnitTrace& m, const TracelessBasis& basis) {
  return to_bloch(m.matrix(), basis);
}

HermitianUnitTrace from_bloch(const BlochVector& x, const TracelessBasis& basis) {
  require_same_dim(x.n, basis.n(), "from_bloch");
  require_same_dim(x.coords.size(), basis.size(), "from_bloch");
  ComplexMatrix m = ComplexMatrix::identity(basis.n()) * (1.0 / static_cast<double>(basis.n()));
  for (std::size_t i = 0; i < basis.size(); ++i) m += basis[i] * x.coords[i];
  return HermitianUnitTrace(std::move(m));
}

double distance(const HermitianUnitTrace& a, const HermitianUnitTrace& b) {
  require_same_dim(a.n(), b.n(), "distance");
  const ComplexMatrix d = a.matrix() - b.matrix();
  return std::sqrt(std::max(0.0, 0.5 * trace_product(d, d).real()));
}

double inner(const HermitianUnitTrace& a, const HermitianUnitTrace& b) {
  require_same_dim(a.n(), b.n(), "inner");
  return 0.5 * (trace_product(a.matrix(), b.matrix()).real() - 1.0 / static_cast<double>(a.n()));
}

std::vector<double> eigenvalues(const ComplexMatrix& input, double hermitian_tol) {
  if (double d = input.hermiticity_defect(); d > hermitian_tol) {
    throw InvalidInput("eigenvalues: matrix is not Hermitian (defect " + std::to_string(d) + ")");
  }
  const std::size_t n = input.n();
  ComplexMatrix a = input;
  // Symmetrize so roundoff asymmetry never drives the rotations.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex v = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = v;
      a(c, r) = std::conj(v);
    }
  }

  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < kJacobiMaxSweeps && off_mass() >= kJacobiOffDiagonalThreshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Rotate the phase of index q so that a(p,q) becomes real positive.
        const Complex phase = a(p, q) / mag;
        for (std::size_t k = 0; k < n; ++k) {
          a(k, q) *= std::conj(phase);
          a(q, k) *= phase;
        }
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex kp = a(k, p);
          const Complex kq = a(k, q);
          a(k, p) = c * kp - s * kq;
          a(k, q) = s * kp + c * kq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex pk = a(p, k);
          const Complex qk = a(q, k);
          a(p, k) = c * pk - s * qk;
          a(q, k) = s * pk + c * qk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<double> eigenvalues(const HermitianUnitTrace& m) { return eigenvalues(m.matrix()); }

bool is_density_matrix(const HermitianUnitTrace& m, double tol) {
  const auto values = eigenvalues(m);
  return values.back() >= -tol;
}

}  // namespace cpoly
