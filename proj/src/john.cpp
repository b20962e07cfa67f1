#include "cpoly/john.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpoly/error.hpp"

namespace cpoly {

void validate_touching_set(const TouchingSet& ts, double tol) {
  if (ts.points.size() != ts.weights.size()) throw InvalidInput("touching set: points and weights differ in count");
  if (ts.points.empty()) return;
  const double r0 = ts.points.front().norm();
  for (std::size_t i = 0; i < ts.points.size(); ++i) {
    if (std::abs(ts.points[i].norm() - r0) > tol) {
      throw InvalidInput("touching set: point " + std::to_string(i) + " is off the common sphere");
    }
    if (!(ts.weights[i] > 0.0)) throw InvalidInput("touching set: weight " + std::to_string(i) + " is not positive");
  }
}

TouchingSet polytope_touching_set(const CPolytope& p) {
  const auto gram = check_gram(p, kDefaultTolerances.spectral);
  if (!gram.pass) {
    throw InvalidInput("polytope_touching_set: degenerate polytope (Gram deviation " +
                       std::to_string(gram.max_deviation) + ")");
  }
  const std::size_t n = p.n();
  const double scale = -1.0 / static_cast<double>(n - 1);
  const double mean = 1.0 / static_cast<double>(n + 1);

  TouchingSet ts;
  ts.n = n;
  const std::uint64_t faces = point_face_count(n);
  ts.points.reserve(faces);
  for (std::uint64_t i = 0; i < faces; ++i) {
    const PointFace f = point_face_from_index(n, i);
    BlochVector u{n, std::vector<double>(p.dim(), 0.0)};
    for (std::size_t l = 0; l <= n; ++l) u = u + p.corner(l, f.selection[l]) * (scale * mean);
    ts.points.push_back(std::move(u));
  }
  ts.weights.assign(ts.points.size(), 1.0);
  validate_touching_set(ts);
  return ts;
}

TouchingSet density_touching_set(const MubSet& set, const TracelessBasis& basis) {
  if (!set.complete()) throw InvalidInput("density_touching_set: incomplete MUB set");
  if (set.n != basis.n()) throw DimensionMismatch("density_touching_set: chart dimension differs");
  const std::size_t n = set.n;
  const double inv = 1.0 / static_cast<double>(n - 1);
  TouchingSet ts;
  ts.n = n;
  ts.matrices.emplace();
  for (const auto& group : projectors(set))
    for (const auto& proj : group) {
      ComplexMatrix touch = (ComplexMatrix::identity(n) - proj) * inv;
      ts.points.push_back(to_bloch(touch, basis));
      ts.matrices->push_back(std::move(touch));
    }
  ts.weights.assign(ts.points.size(), 1.0);
  validate_touching_set(ts);
  return ts;
}

JohnReport verify_john(const TouchingSet& ts, double tol) {
  if (ts.points.empty()) throw InvalidInput("verify_john: empty touching set");
  if (ts.points.size() != ts.weights.size()) throw InvalidInput("verify_john: points and weights differ in count");
  const std::size_t dim = ts.points.front().coords.size();
  std::vector<double> s1(dim, 0.0);
  std::vector<double> s2(dim * dim, 0.0);
  for (std::size_t i = 0; i < ts.points.size(); ++i) {
    const auto& u = ts.points[i].coords;
    if (u.size() != dim) throw DimensionMismatch("verify_john: points of different dimension");
    const double c = ts.weights[i];
    for (std::size_t a = 0; a < dim; ++a) {
      s1[a] += c * u[a];
      const double cu = c * u[a];
      for (std::size_t b = a; b < dim; ++b) s2[a * dim + b] += cu * u[b];
    }
  }
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < a; ++b) s2[a * dim + b] = s2[b * dim + a];

  JohnReport r;
  double norm2 = 0.0;
  for (double x : s1) norm2 += x * x;
  r.condition1_residual = std::sqrt(norm2);
  double trace = 0.0;
  for (std::size_t a = 0; a < dim; ++a) trace += s2[a * dim + a];
  r.lambda = trace / static_cast<double>(dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      r.condition2_residual = std::max(r.condition2_residual, std::abs(s2[a * dim + b] - (a == b ? r.lambda : 0.0)));

  if (ts.n >= 2 && dim == ts.n * ts.n - 1) {
    const std::size_t block = ts.n - 1;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        if (a / block != b / block) r.cross_block_max = std::max(r.cross_block_max, std::abs(s2[a * dim + b]));
  }
  r.pass = r.condition1_residual <= tol && r.condition2_residual <= tol;
  return r;
}

SicReport verify_sic(const std::vector<StateVector>& vectors, double tol) {
  if (vectors.empty()) throw InvalidInput("verify_sic: no vectors");
  const std::size_t n = vectors.front().size();
  if (n < 2) throw InvalidDimension("verify_sic: dimension must be >= 2");
  if (vectors.size() != n * n) {
    throw InvalidInput("verify_sic: expected N² = " + std::to_string(n * n) + " vectors, got " +
                       std::to_string(vectors.size()));
  }
  SicReport r;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) throw InvalidInput("verify_sic: ragged vectors");
    double norm2 = 0.0;
    for (const auto& z : vectors[i]) norm2 += std::norm(z);
    r.max_norm_deviation = std::max(r.max_norm_deviation, std::abs(norm2 - 1.0));
  }
  if (r.max_norm_deviation > tol) throw InvalidInput("verify_sic: vectors are not unit vectors");

  const double target = 1.0 / static_cast<double>(n + 1);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      Complex ip = 0.0;
      for (std::size_t m = 0; m < n; ++m) ip += std::conj(vectors[i][m]) * vectors[j][m];
      const double dev = std::abs(std::norm(ip) - target);
      if (dev > r.max_overlap_deviation) {
        r.max_overlap_deviation = dev;
        r.witness_i = i;
        r.witness_j = j;
      }
    }
  if (r.max_overlap_deviation > tol) return r;

  const auto basis = make_traceless_basis(n);
  TouchingSet ts;
  ts.n = n;
  ComplexMatrix sum(n);
  for (const auto& v : vectors) {
    const auto proj = ComplexMatrix::outer(v);
    ts.points.push_back(to_bloch(proj, basis));
    sum += proj;
  }
  ts.weights.assign(ts.points.size(), 1.0);
  r.john = verify_john(ts, tol);

  const double scale = sum.trace().real() / static_cast<double>(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      r.povm_residual = std::max(r.povm_residual, std::abs(sum(a, b) - Complex(a == b ? scale : 0.0)));
  r.povm = r.povm_residual <= tol;
  r.pass = r.john->pass && r.povm;
  return r;
}

}  // namespace cpoly
