#include "cpoly/inscription.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "cpoly/error.hpp"

namespace cpoly {

SharedCornerReport check_shared_corners(const std::vector<PointFace>& faces) {
  SharedCornerReport report;
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t b = a + 1; b < faces.size(); ++b) {
      const std::size_t s = shared_corners(faces[a], faces[b]);
      if (s != 1) {
        report.face_a = a;
        report.face_b = b;
        report.shared = s;
        return report;
      }
    }
  report.pass = true;
  return report;
}

PointFaceArray build_point_face_array(std::size_t n, const MolsSet& mols) {
  if (n < 2) throw InvalidDimension("build_point_face_array: n must be >= 2");
  if (mols.n != n || mols.squares.size() != n - 1) {
    throw InvalidInput("build_point_face_array: expected " + std::to_string(n - 1) + " squares of order " +
                       std::to_string(n));
  }
  for (const auto& sq : mols.squares)
    if (sq.n != n || !is_latin(sq)) throw InvalidInput("build_point_face_array: input square is not Latin");

  PointFaceArray arr;
  arr.n = n;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      PointFace f;
      f.selection.reserve(n + 1);
      f.selection.push_back(c);
      f.selection.push_back(r);
      for (const auto& sq : mols.squares) f.selection.push_back(sq.grid[r][c]);
      arr.faces.push_back(std::move(f));
    }
  const auto shared = check_shared_corners(arr.faces);
  if (!shared.pass) {
    throw InvalidInput("build_point_face_array: faces " + std::to_string(shared.face_a) + " and " +
                       std::to_string(shared.face_b) + " share " + std::to_string(shared.shared) +
                       " corners (squares are not mutually orthogonal)");
  }
  return arr;
}

ASimplexReport verify_asimplex(const CPolytope& p, const std::vector<PointFace>& faces, double tol) {
  ASimplexReport report;
  report.n = p.n();
  report.used_matrices = p.realized();
  const std::size_t m = faces.size();
  std::vector<FaceOperator> ops;
  ops.reserve(m);
  for (const auto& f : faces) ops.push_back(face_operator(p, f));

  const double inv_n = 1.0 / static_cast<double>(p.n());
  report.gram.assign(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const double v = p.realized() ? trace_product(*ops[a].matrix, *ops[b].matrix).real()
                                    : 2.0 * dot(ops[a].bloch, ops[b].bloch) + inv_n;
      report.gram[a * m + b] = report.gram[b * m + a] = v;
      if (a == b) {
        report.max_diagonal_deviation =
            std::max(report.max_diagonal_deviation, std::abs(v - static_cast<double>(p.n())));
      } else if (std::abs(v) > report.max_off_diagonal) {
        report.max_off_diagonal = std::abs(v);
        report.witness_a = a;
        report.witness_b = b;
        report.witness_value = v;
      }
    }
  report.pass = report.max_diagonal_deviation <= tol && report.max_off_diagonal <= tol;
  report.complete_orthogonal_basis = report.pass && m == p.n() * p.n();
  return report;
}

ASimplexReport verify_asimplex(const CPolytope& p, const PointFaceArray& arr, double tol) {
  if (arr.n != p.n()) throw DimensionMismatch("verify_asimplex: array and polytope orders differ");
  return verify_asimplex(p, arr.faces, tol);
}

InscriptionSearchResult exhaustive_inscription_search(std::size_t n, const CPolytope& p, double tol) {
  if (n < 2 || n > kMaxInscriptionSearchOrder) {
    throw SizeCapExceeded("exhaustive_inscription_search: n must be 2 or 3");
  }
  if (p.n() != n) throw DimensionMismatch("exhaustive_inscription_search: polytope order differs");
  const std::uint64_t total = point_face_count(n);
  std::vector<PointFace> all;
  for (std::uint64_t i = 0; i < total; ++i) all.push_back(point_face_from_index(n, i));
  std::vector<std::vector<bool>> compatible(total, std::vector<bool>(total, false));
  for (std::uint64_t a = 0; a < total; ++a)
    for (std::uint64_t b = 0; b < total; ++b) compatible[a][b] = a != b && shared_corners(all[a], all[b]) == 1;

  InscriptionSearchResult result;
  result.n = n;
  const std::size_t target = n * n;
  std::vector<std::uint64_t> chosen;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t start) {
    if (chosen.size() == target) {
      ++result.solutions;
      result.families.push_back(chosen);
      return;
    }
    // Not enough candidates left to finish.
    if (total - start < target - chosen.size()) return;
    for (std::uint64_t c = start; c < total; ++c) {
      bool ok = true;
      for (auto x : chosen)
        if (!compatible[x][c]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(c);
      extend(c + 1);
      chosen.pop_back();
    }
  };
  extend(0);

  if (!result.families.empty()) {
    std::vector<PointFace> witness;
    for (auto idx : result.families.front()) witness.push_back(all[idx]);
    auto report = verify_asimplex(p, witness, tol);
    result.geometry_agrees = report.pass;
    result.witness_report = std::move(report);
    result.witness = std::move(witness);
  }
  return result;
}

InscriptionSearchResult exhaustive_inscription_search(std::size_t n, double tol) {
  return exhaustive_inscription_search(n, build_abstract(n), tol);
}

AffinePlane plane_dictionary(const PointFaceArray& arr) {
  const std::size_t n = arr.n;
  if (arr.faces.size() != n * n) throw InvalidInput("plane_dictionary: array must hold N^2 faces");
  for (const auto& f : arr.faces) validate_point_face(n, f);
  const auto shared = check_shared_corners(arr.faces);
  if (!shared.pass) {
    throw InvalidInput("plane_dictionary: faces " + std::to_string(shared.face_a) + " and " +
                       std::to_string(shared.face_b) + " share " + std::to_string(shared.shared) + " corners");
  }
  AffinePlane plane;
  plane.n = n;
  plane.pencils.assign(n + 1, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t face = 0; face < arr.faces.size(); ++face)
    for (std::size_t l = 0; l <= n; ++l) plane.pencils[l][arr.faces[face].selection[l]].push_back(face);
  return plane;
}

std::vector<std::size_t> faces_through(const PointFaceArray& arr, std::size_t l1, std::size_t k1, std::size_t l2,
                                       std::size_t k2) {
  std::vector<std::size_t> out;
  for (std::size_t face = 0; face < arr.faces.size(); ++face) {
    const auto& s = arr.faces[face].selection;
    if (s.at(l1) == k1 && s.at(l2) == k2) out.push_back(face);
  }
  return out;
}

bool same_incidence(const AffinePlane& a, const AffinePlane& b) {
  if (a.n != b.n) return false;
  auto canonical = [](const AffinePlane& plane) {
    auto lines = plane.lines();
    for (auto& line : lines) std::sort(line.begin(), line.end());
    std::sort(lines.begin(), lines.end());
    return lines;
  };
  return canonical(a) == canonical(b);
}

}  // namespace cpoly
