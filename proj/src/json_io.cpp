#include "cpoly/json_io.hpp"

#include <fstream>

#include "cpoly/error.hpp"

namespace cpoly {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("JSON: missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidInput(std::string("JSON: field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

const Json& array_of(const Json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected) {
    throw InvalidInput(std::string("JSON: ") + what + " must be an array of length " + std::to_string(expected));
  }
  return j;
}

Json log_field(const char* name, const LogValue& v) {
  return Json{{"name", name}, {"log", v.log}, {"representable", v.value.has_value()}};
}

Json value_or_null(const LogValue& v) { return v.value ? Json(*v.value) : Json(nullptr); }

}  // namespace

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidInput("JSON: complex value must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.n(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.n(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const Json& rows = array_of(field(j, "entries"), n, "entries");
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = array_of(rows[r], n, "matrix row");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = complex_from_json(row[c]);
  }
  return m;
}

Json mub_set_to_json(const MubSet& set) {
  Json bases = Json::array();
  for (const auto& b : set.bases) {
    Json vectors = Json::array();
    for (const auto& v : b.vectors) {
      Json comps = Json::array();
      for (const auto& z : v) comps.push_back(complex_to_json(z));
      vectors.push_back(std::move(comps));
    }
    bases.push_back(std::move(vectors));
  }
  return Json{{"n", set.n}, {"bases", std::move(bases)}};
}

MubSet mub_set_from_json(const Json& j) {
  MubSet set;
  set.n = size_field(j, "n");
  const Json& bases = field(j, "bases");
  if (!bases.is_array()) throw InvalidInput("JSON: bases must be an array");
  for (const auto& b : bases) {
    if (!b.is_array()) throw InvalidInput("JSON: basis must be an array of vectors");
    Basis basis;
    for (const auto& v : b) {
      if (!v.is_array()) throw InvalidInput("JSON: vector must be an array");
      StateVector sv;
      for (const auto& z : v) sv.push_back(complex_from_json(z));
      basis.vectors.push_back(std::move(sv));
    }
    set.bases.push_back(std::move(basis));
  }
  return set;
}

Json field_spec_to_json(const FieldSpec& spec) {
  return Json{{"p", spec.p}, {"k", spec.k}, {"modulus", spec.modulus}};
}

FieldSpec field_spec_from_json(const Json& j) {
  FieldSpec spec;
  spec.p = static_cast<std::uint32_t>(size_field(j, "p"));
  spec.k = static_cast<std::uint32_t>(size_field(j, "k"));
  spec.modulus = array_of(field(j, "modulus"), spec.k + 1, "modulus").get<std::vector<std::uint32_t>>();
  if (!is_prime(spec.p)) throw InvalidInput("FieldSpec: p is not prime");
  if (spec.modulus.back() != 1) throw InvalidInput("FieldSpec: modulus is not monic");
  if (!is_irreducible(spec.modulus, spec.p)) throw InvalidInput("FieldSpec: modulus is not irreducible");
  return spec;
}

Json latin_square_to_json(const LatinSquare& l) { return Json{{"n", l.n}, {"grid", l.grid}}; }

LatinSquare latin_square_from_json(const Json& j) {
  LatinSquare l;
  l.n = size_field(j, "n");
  const Json& grid = array_of(field(j, "grid"), l.n, "grid");
  for (const auto& row : grid) {
    array_of(row, l.n, "grid row");
    std::vector<std::size_t> cells;
    for (const auto& cell : row) {
      if (!cell.is_number_integer() || cell.get<long long>() < 0) throw InvalidInput("JSON: grid cell must be >= 0");
      cells.push_back(cell.get<std::size_t>());
    }
    l.grid.push_back(std::move(cells));
  }
  return l;
}

Json mols_to_json(const MolsSet& mols) {
  Json squares = Json::array();
  for (const auto& sq : mols.squares) squares.push_back(latin_square_to_json(sq));
  return Json{{"n", mols.n}, {"squares", std::move(squares)}};
}

MolsSet mols_from_json(const Json& j) {
  MolsSet mols;
  mols.n = size_field(j, "n");
  const Json& squares = field(j, "squares");
  if (!squares.is_array()) throw InvalidInput("JSON: squares must be an array");
  for (const auto& sq : squares) mols.squares.push_back(latin_square_from_json(sq));
  return mols;
}

Json point_face_array_to_json(const PointFaceArray& arr) {
  Json sigma = Json::array();
  for (std::size_t r = 0; r < arr.n; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < arr.n; ++c) row.push_back(arr.at(r, c).selection);
    sigma.push_back(std::move(row));
  }
  return Json{{"n", arr.n}, {"sigma", std::move(sigma)}};
}

PointFaceArray point_face_array_from_json(const Json& j) {
  PointFaceArray arr;
  arr.n = size_field(j, "n");
  const Json& sigma = array_of(field(j, "sigma"), arr.n, "sigma");
  for (const auto& row : sigma) {
    array_of(row, arr.n, "sigma row");
    for (const auto& sel : row) {
      array_of(sel, arr.n + 1, "selection");
      arr.faces.push_back(PointFace{sel.get<std::vector<std::size_t>>()});
    }
  }
  for (const auto& f : arr.faces) validate_point_face(arr.n, f);
  return arr;
}

Json state_vectors_to_json(const std::vector<StateVector>& vectors) {
  Json vs = Json::array();
  for (const auto& v : vectors) {
    Json comps = Json::array();
    for (const auto& z : v) comps.push_back(complex_to_json(z));
    vs.push_back(std::move(comps));
  }
  return Json{{"n", vectors.empty() ? 0 : vectors.front().size()}, {"vectors", std::move(vs)}};
}

std::vector<StateVector> state_vectors_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const Json& vs = field(j, "vectors");
  if (!vs.is_array()) throw InvalidInput("JSON: vectors must be an array");
  std::vector<StateVector> out;
  for (const auto& v : vs) {
    array_of(v, n, "vector");
    StateVector sv;
    for (const auto& z : v) sv.push_back(complex_from_json(z));
    out.push_back(std::move(sv));
  }
  return out;
}

Json affine_plane_to_json(const AffinePlane& plane) {
  return Json{{"n", plane.n}, {"points", plane.point_count()}, {"pencils", plane.pencils}};
}

Json geometry_report_to_json(const GeometryReport& r) {
  return Json{{"n", r.n},
              {"v_polytope", value_or_null(r.v_polytope)},
              {"v_body", value_or_null(r.v_body)},
              {"ratio", value_or_null(r.ratio)},
              {"r_in", r.r_in},
              {"area", value_or_null(r.area)},
              {"ra_over_v_polytope", r.ra_over_v_polytope},
              {"ra_over_v_body", r.ra_over_v_body},
              {"log_scale_fields",
               Json::array({log_field("v_polytope", r.v_polytope), log_field("v_body", r.v_body),
                            log_field("ratio", r.ratio), log_field("area", r.area)})}};
}

Json volume_estimate_to_json(const VolumeEstimate& v) {
  Json j{{"mode", v.mode == VolumeMode::ConeDeterminant ? "cone" : "mc"}, {"value", v.value}};
  if (v.mode == VolumeMode::MonteCarlo) {
    j["standard_error"] = v.standard_error;
    j["samples"] = v.samples;
    j["hits"] = v.hits;
    j["seed"] = v.seed;
  }
  return j;
}

Json mub_report_to_json(const MubReport& r) {
  return Json{{"pass", r.pass},
              {"tol", r.tol},
              {"max_orthonormality_violation", r.max_orthonormality_violation},
              {"max_unbiasedness_violation", r.max_unbiasedness_violation},
              {"cross_pairs_checked", r.cross_pairs_checked},
              {"worst_pair", Json{{"basis_a", r.witness[0]},
                                  {"vector_a", r.witness[1]},
                                  {"basis_b", r.witness[2]},
                                  {"vector_b", r.witness[3]}}}};
}

Json john_report_to_json(const JohnReport& r) {
  return Json{{"condition1_residual", r.condition1_residual},
              {"condition2_residual", r.condition2_residual},
              {"lambda", r.lambda},
              {"pass", r.pass}};
}

Json asimplex_report_to_json(const ASimplexReport& r, bool include_gram) {
  Json j{{"pass", r.pass},
         {"n", r.n},
         {"used_matrices", r.used_matrices},
         {"max_diagonal_deviation", r.max_diagonal_deviation},
         {"max_off_diagonal", r.max_off_diagonal},
         {"worst_pair", Json{{"face_a", r.witness_a}, {"face_b", r.witness_b}, {"value", r.witness_value}}},
         {"complete_orthogonal_basis", r.complete_orthogonal_basis}};
  if (include_gram) j["gram"] = r.gram;
  return j;
}

Json plane_report_to_json(const PlaneReport& r) {
  return Json{{"pass", r.pass}, {"message", r.message}, {"witness", r.witness}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace cpoly
