#pragma once

#include <json.hpp>

#include "skw/chain_complex.hpp"
#include "skw/matrix.hpp"
#include "skw/schur_complex.hpp"

namespace skw {

using Json = nlohmann::ordered_json;

/// {"rows", "cols", "coeff": "int" | "gfp" | "linform", "entries": [[row, col, value], ...]}.
/// Linear-form values are [[i, j, c], ...]; "gfp" matrices also carry "prime".
Json to_json(const IntSparse& m);
Json to_json(const ModSparse& m);
Json to_json(const FormSparse& m);

/// Reads an "int" matrix (or a "gfp" one, lifted to (-p/2, p/2]).
/// Throws Error on malformed input.
IntMatrix int_matrix_from_json(const Json& j);

/// {"schema", "shape", "f", "g", "order", "components": [{"degree", "rank",
/// "tableaux"}], "differentials": [...]}; tableaux are row lists of labels.
Json to_json(const SchurComplex& c);
/// Specialized complex; basis labels are carried over from the generic one.
Json to_json(const SchurComplex& c, const IntComplex& specialized);
Json to_json(const SchurComplex& c, const ModComplex& specialized);

}  // namespace skw
