#pragma once

#include <string>

#include "json.hpp"
#include "rhkit/cauchy.hpp"
#include "rhkit/curve.hpp"

namespace rhkit {

// All reports use insertion-ordered objects so the serialized field order
// is the construction order, independent of key names.
using ojson = nlohmann::ordered_json;

// Field access that names the offending key in the diagnostic.
const ojson& require_field(const ojson& j, const char* name);
double require_double(const ojson& j, const char* name);
int require_int(const ojson& j, const char* name);

// Complex numbers travel as [re, im] pairs.
ojson complex_to_json(cd z);
cd complex_from_json(const ojson& j, const char* what);

// Curves: {"kind":"unit_circle","n":N} or
// {"kind":"fourier","n":N,"coeffs":[{"m":-1,"re":..,"im":..},...]}.
ClosedCurve curve_from_json(const ojson& j);
ojson curve_to_json(const ClosedCurve& c);

// Samples: {"r":1,"values":[[re,im],...]} for scalars; for r > 1 each
// node holds an r x r row-major matrix of [re, im] entries.
BoundaryFunction samples_from_json(const ojson& j);
ojson samples_to_json(const BoundaryFunction& u);

// One r x r matrix as nested rows of [re, im].
ojson matrix_to_json(const std::vector<cd>& entries, int r);

// Deterministic serialization: fixed indentation, fixed field order (the
// insertion order), doubles printed with 17 significant digits, so equal
// reports are byte-identical.
std::string dump_deterministic(const ojson& j, int indent = 2);

}  // namespace rhkit
