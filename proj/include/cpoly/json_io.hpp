#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cpoly/designs.hpp"
#include "cpoly/finite_field.hpp"
#include "cpoly/hermitian_space.hpp"
#include "cpoly/inscription.hpp"
#include "cpoly/john.hpp"
#include "cpoly/mub.hpp"
#include "cpoly/polytope.hpp"

// File and report schemas. Complex numbers are [re, im] pairs; matrices and
// vectors are row-major nested arrays. Readers throw cpoly::InvalidInput on
// malformed documents.
namespace cpoly {

using Json = nlohmann::json;

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

// { "n": int, "entries": [[[re,im], ...], ...] }
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// { "n": int, "bases": [[[[re,im], ...], ...], ...] }
Json mub_set_to_json(const MubSet& set);
MubSet mub_set_from_json(const Json& j);

// { "p": int, "k": int, "modulus": [int, ...] }
Json field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const Json& j);

// { "n": int, "grid": [[int, ...], ...] }
Json latin_square_to_json(const LatinSquare& l);
LatinSquare latin_square_from_json(const Json& j);

// { "n": int, "squares": [LatinSquare, ...] }
Json mols_to_json(const MolsSet& mols);
MolsSet mols_from_json(const Json& j);

// { "n": int, "sigma": [[[int, ...], ...], ...] }, sigma[r][c] = selection.
Json point_face_array_to_json(const PointFaceArray& arr);
PointFaceArray point_face_array_from_json(const Json& j);

// { "n": int, "vectors": [[[re,im], ...], ...] }
Json state_vectors_to_json(const std::vector<StateVector>& vectors);
std::vector<StateVector> state_vectors_from_json(const Json& j);

Json affine_plane_to_json(const AffinePlane& plane);

Json geometry_report_to_json(const GeometryReport& r);
Json volume_estimate_to_json(const VolumeEstimate& v);
Json mub_report_to_json(const MubReport& r);
Json john_report_to_json(const JohnReport& r);
Json asimplex_report_to_json(const ASimplexReport& r, bool include_gram = false);
Json plane_report_to_json(const PlaneReport& r);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace cpoly
