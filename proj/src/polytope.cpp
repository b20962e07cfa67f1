#include "cpoly/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cpoly/error.hpp"
#include "cpoly/parallel.hpp"

namespace cpoly {

namespace {

double small_r(std::size_t m) { return 1.0 / std::sqrt(2.0 * static_cast<double>(m * (m + 1))); }
double big_r(std::size_t m) { return static_cast<double>(m) * small_r(m); }

void require_n_at_least_two(std::size_t n, const char* what) {
  if (n < 2) throw InvalidDimension(std::string(what) + ": n must be >= 2, got " + std::to_string(n));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Counter-based stream: draw i of sample s is splitmix64(key(seed, s) + i).
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t sample) : key_(splitmix64(seed ^ splitmix64(sample))) {}

  // Uniform in (0, 1).
  double uniform() {
    const std::uint64_t bits = splitmix64(key_ + counter_++) >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  double gaussian() {
    if (spare_) {
      const double g = *spare_;
      spare_.reset();
      return g;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * std::sin(2.0 * std::numbers::pi * u2);
    return radius * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::optional<double> spare_;
};

double abs_determinant(std::vector<double> m, std::size_t d) {
  double det = 1.0;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < d; ++r)
      if (std::abs(m[r * d + col]) > std::abs(m[pivot * d + col])) pivot = r;
    if (m[pivot * d + col] == 0.0) return 0.0;
    if (pivot != col)
      for (std::size_t c = 0; c < d; ++c) std::swap(m[pivot * d + c], m[col * d + c]);
    det *= m[col * d + col];
    for (std::size_t r = col + 1; r < d; ++r) {
      const double f = m[r * d + col] / m[col * d + col];
      for (std::size_t c = col; c < d; ++c) m[r * d + c] -= f * m[col * d + c];
    }
  }
  return std::abs(det);
}

}  // namespace

CPolytope::CPolytope(std::size_t n, std::vector<std::vector<BlochVector>> corners,
                     std::optional<std::vector<std::vector<ComplexMatrix>>> projectors)
    : n_(n), corners_(std::move(corners)), projectors_(std::move(projectors)) {
  require_n_at_least_two(n, "CPolytope");
  if (corners_.size() != n + 1) throw InvalidInput("CPolytope: expected N+1 simplices");
  for (const auto& simplex : corners_) {
    if (simplex.size() != n) throw InvalidInput("CPolytope: expected N corners per simplex");
    for (const auto& c : simplex)
      if (c.coords.size() != n * n - 1) throw DimensionMismatch("CPolytope: corner has wrong dimension");
  }
  if (projectors_) {
    if (projectors_->size() != n + 1) throw InvalidInput("CPolytope: projector table shape");
    for (const auto& group : *projectors_) {
      if (group.size() != n) throw InvalidInput("CPolytope: projector table shape");
      for (const auto& m : group)
        if (m.n() != n) throw DimensionMismatch("CPolytope: projector has wrong dimension");
    }
  }
}

double expected_gram(std::size_t n, std::size_t flat_a, std::size_t flat_b) {
  const double nn = static_cast<double>(n);
  if (flat_a / n != flat_b / n) return 0.0;
  if (flat_a == flat_b) return (nn - 1.0) / (2.0 * nn);
  return -1.0 / (2.0 * nn);
}

std::vector<double> gram_matrix(const CPolytope& p) {
  const std::size_t m = p.corner_count();
  std::vector<double> g(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) g[a * m + b] = g[b * m + a] = dot(p.corner(a), p.corner(b));
  return g;
}

GramReport check_gram(const CPolytope& p, double tol) {
  GramReport report;
  const std::size_t m = p.corner_count();
  const auto g = gram_matrix(p);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const double dev = std::abs(g[a * m + b] - expected_gram(p.n(), a, b));
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.witness_a = a;
        report.witness_b = b;
      }
    }
  for (std::size_t l = 0; l < p.simplex_count(); ++l) {
    BlochVector sum{p.n(), std::vector<double>(p.dim())};
    for (std::size_t k = 0; k < p.n(); ++k) sum = sum + p.corner(l, k);
    report.max_simplex_sum = std::max(report.max_simplex_sum, sum.norm());
  }
  report.pass = report.max_deviation <= tol && report.max_simplex_sum <= tol;
  return report;
}

CPolytope build_abstract(std::size_t n) {
  require_n_at_least_two(n, "build_abstract");
  const std::size_t dim = n * n - 1;
  const std::size_t block = n - 1;
  std::vector<std::vector<BlochVector>> corners(n + 1);
  for (std::size_t l = 0; l <= n; ++l) {
    const std::size_t offset = l * block;
    for (std::size_t k = 0; k < n; ++k) {
      BlochVector c{n, std::vector<double>(dim, 0.0)};
      // Coordinate m (1-based within the block) of corner k.
      for (std::size_t m = 1; m <= block; ++m) {
        double value = 0.0;
        if (m == k) value = big_r(m);
        else if (m > k) value = -small_r(m);
        c.coords[offset + m - 1] = value;
      }
      corners[l].push_back(std::move(c));
    }
  }
  return CPolytope(n, std::move(corners));
}

CPolytope build_from_mub(const MubSet& set, const TracelessBasis& basis) {
  if (set.n != basis.n()) throw DimensionMismatch("build_from_mub: MUB and chart dimensions differ");
  if (!set.complete()) {
    throw InvalidInput("build_from_mub: incomplete MUB set (" + std::to_string(set.bases.size()) + " of " +
                       std::to_string(set.n + 1) + " bases)");
  }
  if (!verify_mub(set, kDefaultTolerances.spectral).pass) {
    throw InvalidInput("build_from_mub: input does not pass verify_mub");
  }
  auto proj = projectors(set);
  std::vector<std::vector<BlochVector>> corners(set.n + 1);
  for (std::size_t l = 0; l <= set.n; ++l)
    for (const auto& pm : proj[l]) corners[l].push_back(to_bloch(pm, basis));
  return CPolytope(set.n, std::move(corners), std::move(proj));
}

std::uint64_t point_face_count(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i <= n; ++i) c *= n;
  return c;
}

PointFace point_face_from_index(std::size_t n, std::uint64_t index) {
  if (index >= point_face_count(n)) throw InvalidInput("point_face_from_index: index out of range");
  PointFace f;
  f.selection.resize(n + 1);
  for (std::size_t l = 0; l <= n; ++l) {
    f.selection[l] = static_cast<std::size_t>(index % n);
    index /= n;
  }
  return f;
}

std::uint64_t point_face_index(std::size_t n, const PointFace& face) {
  validate_point_face(n, face);
  std::uint64_t idx = 0;
  for (std::size_t l = face.selection.size(); l-- > 0;) idx = idx * n + face.selection[l];
  return idx;
}

void validate_point_face(std::size_t n, const PointFace& face) {
  if (face.selection.size() != n + 1) {
    throw InvalidInput("point face must select exactly one corner from each of the " + std::to_string(n + 1) +
                       " simplices");
  }
  for (std::size_t l = 0; l <= n; ++l)
    if (face.selection[l] >= n) {
      throw InvalidInput("point face index out of range: simplex " + std::to_string(l) + " corner " +
                         std::to_string(face.selection[l]));
    }
}

std::size_t shared_corners(const PointFace& a, const PointFace& b) {
  if (a.selection.size() != b.selection.size()) throw DimensionMismatch("shared_corners: size mismatch");
  std::size_t s = 0;
  for (std::size_t l = 0; l < a.selection.size(); ++l) s += a.selection[l] == b.selection[l] ? 1 : 0;
  return s;
}

FaceOperator face_operator(const CPolytope& p, const PointFace& face) {
  validate_point_face(p.n(), face);
  FaceOperator op{BlochVector{p.n(), std::vector<double>(p.dim(), 0.0)}, std::nullopt};
  for (std::size_t l = 0; l <= p.n(); ++l) op.bloch = op.bloch + p.corner(l, face.selection[l]);
  if (p.realized()) {
    ComplexMatrix a = ComplexMatrix::identity(p.n()) * -1.0;
    for (std::size_t l = 0; l <= p.n(); ++l) a += p.projector(l, face.selection[l]);
    op.matrix = std::move(a);
  }
  return op;
}

double face_value(const BlochVector& x, const PointFace& face, const CPolytope& p) {
  if (x.coords.size() != p.dim()) throw DimensionMismatch("face_value: dimension mismatch");
  validate_point_face(p.n(), face);
  double s = 0.0;
  for (std::size_t l = 0; l <= p.n(); ++l) s += dot(x, p.corner(l, face.selection[l]));
  return 2.0 * s + 1.0 / static_cast<double>(p.n());
}

double face_value(const HermitianUnitTrace& rho, const PointFace& face, const CPolytope& p) {
  if (rho.n() != p.n()) throw DimensionMismatch("face_value: dimension mismatch");
  if (p.realized()) {
    const auto op = face_operator(p, face);
    return trace_product(rho.matrix(), *op.matrix).real();
  }
  return face_value(to_bloch(rho, make_traceless_basis(p.n())), face, p);
}

double min_face_value(const BlochVector& x, const CPolytope& p) {
  if (x.coords.size() != p.dim()) throw DimensionMismatch("membership: dimension mismatch");
  double s = 0.0;
  for (std::size_t l = 0; l <= p.n(); ++l) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < p.n(); ++k) best = std::min(best, dot(x, p.corner(l, k)));
    s += best;
  }
  return 2.0 * s + 1.0 / static_cast<double>(p.n());
}

bool membership(const BlochVector& x, const CPolytope& p, double tol) { return min_face_value(x, p) >= -tol; }

bool membership(const HermitianUnitTrace& rho, const CPolytope& p, double tol) {
  if (rho.n() != p.n()) throw DimensionMismatch("membership: dimension mismatch");
  return membership(to_bloch(rho, make_traceless_basis(p.n())), p, tol);
}

LogValue LogValue::from_log(double log_value) {
  LogValue v{log_value, std::nullopt};
  const double x = std::exp(log_value);
  if (std::isfinite(x) && std::isnormal(x)) v.value = x;
  return v;
}

GeometryReport geometry_report(std::size_t n) {
  require_n_at_least_two(n, "geometry_report");
  const double nn = static_cast<double>(n);
  const double dim = nn * nn - 1.0;
  const double log_dim_factorial = std::lgamma(dim + 1.0);
  double log_superfactorial = 0.0;  // log(1! 2! ... (N-1)!)
  for (std::size_t j = 1; j < n; ++j) log_superfactorial += std::lgamma(static_cast<double>(j) + 1.0);

  GeometryReport r;
  r.n = n;
  const double log_vp = 0.5 * (nn + 1.0) * std::log(nn) - log_dim_factorial - 0.5 * dim * std::log(2.0);
  const double log_vb = 0.5 * std::log(nn) + 0.5 * nn * (nn - 1.0) * std::log(std::numbers::pi) -
                        0.5 * (nn - 1.0) * std::log(2.0) + log_superfactorial - log_dim_factorial;
  const double log_ratio =
      0.5 * nn * std::log(nn) - 0.5 * nn * (nn - 1.0) * std::log(2.0 * std::numbers::pi) - log_superfactorial;
  r.v_polytope = LogValue::from_log(log_vp);
  r.v_body = LogValue::from_log(log_vb);
  r.ratio = LogValue::from_log(log_ratio);
  r.r_in = 1.0 / std::sqrt(2.0 * nn * dim);
  r.r_body = 1.0 / std::sqrt(2.0 * nn * (nn - 1.0));
  r.r_out = std::sqrt((nn - 1.0) / (2.0 * nn));
  // Cone decomposition: V = A r_in / dim.
  r.area = LogValue::from_log(log_vp + std::log(dim) - std::log(r.r_in));
  r.ra_over_v_polytope = r.r_out * dim / r.r_in;
  r.ra_over_v_body = r.r_out * dim / r.r_body;
  return r;
}

double ball_volume(std::size_t dim, double radius) {
  const double d = static_cast<double>(dim);
  return std::exp(0.5 * d * std::log(std::numbers::pi) - std::lgamma(0.5 * d + 1.0) + d * std::log(radius));
}

VolumeEstimate volume_oracle(std::size_t n, VolumeMode mode, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads) {
  require_n_at_least_two(n, "volume_oracle");
  VolumeEstimate est;
  est.mode = mode;
  const CPolytope p = build_abstract(n);
  const std::size_t dim = p.dim();

  if (mode == VolumeMode::ConeDeterminant) {
    if (n > 4) throw UnsupportedDimension("volume_oracle: cone mode supports n <= 4");
    // Drop corner 0 of every simplex; the rest span the cone over one facet.
    std::vector<double> m(dim * dim);
    std::size_t col = 0;
    for (std::size_t l = 0; l <= n; ++l)
      for (std::size_t k = 1; k < n; ++k, ++col)
        for (std::size_t r = 0; r < dim; ++r) m[r * dim + col] = p.corner(l, k).coords[r];
    const double det = abs_determinant(std::move(m), dim);
    est.value = static_cast<double>(point_face_count(n)) * det / std::tgamma(static_cast<double>(dim) + 1.0);
    return est;
  }

  if (n > 3) throw UnsupportedDimension("volume_oracle: monte-carlo mode supports n <= 3");
  if (samples == 0) throw InvalidInput("volume_oracle: monte-carlo mode needs samples > 0");
  const double radius = std::sqrt((static_cast<double>(n) - 1.0) / (2.0 * static_cast<double>(n)));
  const unsigned workers = resolve_threads(threads);
  std::vector<std::uint64_t> hits(workers, 0);
  parallel_chunks(samples, workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    BlochVector x{n, std::vector<double>(dim)};
    std::uint64_t local = 0;
    for (std::size_t s = begin; s < end; ++s) {
      SampleStream rng(seed, s);
      double norm2 = 0.0;
      for (auto& c : x.coords) {
        c = rng.gaussian();
        norm2 += c * c;
      }
      const double scale = radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(dim)) / std::sqrt(norm2);
      for (auto& c : x.coords) c *= scale;
      if (membership(x, p)) ++local;
    }
    hits[chunk] = local;
  });
  for (auto h : hits) est.hits += h;
  est.samples = samples;
  est.seed = seed;
  const double frac = static_cast<double>(est.hits) / static_cast<double>(samples);
  const double vball = ball_volume(dim, radius);
  est.value = frac * vball;
  est.standard_error = vball * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
  return est;
}

}  // namespace cpoly
