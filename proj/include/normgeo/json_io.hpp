#pragma once

#include <string>

#include <json.hpp>

#include "normgeo/gaussian.hpp"
#include "normgeo/qsqrt2.hpp"
#include "normgeo/symmetry_solver.hpp"

namespace normgeo {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCertificateSchema = "normgeo.certificate/1";
inline constexpr const char* kReportSchema = "normgeo.report/1";

/// "a/b + c/d*sqrt2".
Json to_json(const QSqrt2& x);
/// ["a/b", "c/d"].
Json to_json_pair(const QSqrt2& x);
/// Accepts either serialized form.
QSqrt2 qsqrt2_from_json(const Json& j);

/// Exact string, or a number rounded to 15 significant digits when as_float.
Json render(const QSqrt2& x, bool as_float);
/// Rounds to 15 significant digits.
double round15(double x);

/// Row-major nested arrays.
Matrix matrix_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Json to_json(const Matrix& m);
Json to_json(const Vector& v);

/// {"x": [[...]], "v": [...]}.
TangentVector tangent_from_json(const Json& j);
Json to_json(const TangentVector& t);

/// Parses inline JSON text, or reads a file when text starts with '@'.
Json parse_json_argument(const std::string& text);

/// Full machine-checkable record; rows are included so an independent
/// script can replay m * v = 0.
Json certificate_to_json(const TheoremCertificate& cert, bool include_rows = true);

}  // namespace normgeo
