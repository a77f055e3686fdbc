#pragma once

#include <string>

#include <json.hpp>

#include "glasner/cayley.hpp"
#include "glasner/intlinalg.hpp"
#include "glasner/matrix.hpp"
#include "glasner/polymat.hpp"
#include "glasner/search.hpp"
#include "glasner/torus.hpp"
#include "glasner/walk.hpp"

namespace glasner {

using json = nlohmann::json;

// Point-set file format: {dim, mode, points: [[ [num, den], ... ]]} for
// exact sets and {dim, mode, points: [[float, ...]]} for float sets.
json to_json(const TorusPointSet& Y);
TorusPointSet point_set_from_json(const json& j);

// Matrices as arrays of arbitrary-precision integer strings.
json to_json(const IntMat& m);
IntMat int_mat_from_json(const json& j);

// {dim, degree, coeffs: [matrix per degree]}; entries are rational strings.
json to_json(const PolyMatrix& A);
PolyMatrix poly_matrix_from_json(const json& j);

// {dim, generators: [integer matrices], assume_unipotent}
json to_json(const SemigroupPresentation& S);
SemigroupPresentation presentation_from_json(const json& j);

// {dim, matrices, weights: ["p/q", ...]}
json to_json(const WalkMeasure& mu);
WalkMeasure measure_from_json(const json& j);

json to_json(const DensityVerdict& v);
json to_json(const SearchOutcome& o);
json to_json(const SnfFactorization& f);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace glasner
