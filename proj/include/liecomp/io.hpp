#pragma once

#include "liecomp/completion.hpp"
#include "liecomp/sigma.hpp"

#include <json.hpp>

#include <string>

namespace liecomp {

// Insertion-ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Reads and parses a UTF-8 JSON file; ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);

// {"kind":"rational"} or {"kind":"number_field","minpoly":[...ascending...]}
NumberField field_from_json(const Json& j, std::size_t max_degree = kDefaultMaxDegree);
Json to_json(const NumberField& field);

// Comma-separated ascending coefficients, e.g. "-2,0,1".
Polynomial parse_coefficient_list(const std::string& text);

// An array of exactly d rational strings; a bare rational string is read as
// a constant. Degree-1 fields are written as a bare string.
FieldElement element_from_json(const Json& j, const NumberField& field);
Json to_json(const FieldElement& x);

Vector vector_from_json(const Json& j, const NumberField& field, std::size_t length);
Json to_json(const Vector& v);

Matrix matrix_from_json(const Json& j, const NumberField& field, std::size_t rows, std::size_t cols);
Json to_json(const Matrix& m);

// {"field":..., "dim":n, "basis_names":[...], "brackets":[{"i":0,"j":1,
// "value":[{"k":2,"coeff":"1"}]}]}. Rejects i >= j, out-of-range indices,
// repeated pairs or k, and coefficient arrays of the wrong length.
LieAlgebra algebra_from_json(const Json& j, std::size_t max_degree = kDefaultMaxDegree);
Json to_json(const LieAlgebra& algebra);

// {"ideal_gens": [[...]] | "all" | "center" | "zero", "f_matrix": [[...]],
//  "sigma_root": element}. Generators are rational vectors in the
// Q-restriction of `algebra`; a missing f_matrix or sigma_root is the
// identity.
TwistData twist_from_json(const Json& j, const LieAlgebra& algebra);

// K in the algebra format plus "embedding", "N_basis", "source" and the
// constants of the source basis.
Json to_json(const Completion& completion);

// A completion document with "constants":{"label":[vector]}, optionally
// "constant_coords":{"label":[rationals]} for labels that are not source
// basis names, and optionally "L_basis":[[vector]...] (default: the
// embedding columns).
TwoSortedStructure structure_from_json(const Json& j, std::size_t max_degree = kDefaultMaxDegree);

} // namespace liecomp
