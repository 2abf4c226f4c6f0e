#include "normgeo/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace normgeo {

Json to_json(const QSqrt2& x) { return x.to_string(); }

Json to_json_pair(const QSqrt2& x) { return Json::array({x.rational_part().get_str(), x.sqrt2_part().get_str()}); }

QSqrt2 qsqrt2_from_json(const Json& j) {
  if (j.is_string()) return QSqrt2::parse(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
    return QSqrt2(parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()));
  if (j.is_number_integer()) return QSqrt2(j.get<long>());
  throw std::invalid_argument("exact scalar must be a string or a pair of rational strings");
}

double round15(double x) {
  if (x == 0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::stod(buf);
}

Json render(const QSqrt2& x, bool as_float) {
  if (as_float) return round15(x.to_double());
  return to_json(x);
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw std::invalid_argument("matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw std::invalid_argument("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number()) throw std::invalid_argument("matrix entries must be numbers");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = j[r][c].get<double>();
    }
  }
  return m;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw std::invalid_argument("vector entries must be numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(round15(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(round15(v(i)));
  return out;
}

TangentVector tangent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("v"))
    throw std::invalid_argument("tangent must be an object with \"x\" and \"v\"");
  return TangentVector::make(matrix_from_json(j.at("x")), vector_from_json(j.at("v")));
}

Json to_json(const TangentVector& t) { return Json{{"x", to_json(t.x())}, {"v", to_json(t.v())}}; }

Json parse_json_argument(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw std::runtime_error("cannot read " + text.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("invalid JSON argument: " + std::string(e.what()));
  }
}

namespace {

Json triple_json(const std::array<std::size_t, 3>& t) { return Json::array({t[0], t[1], t[2]}); }

}  // namespace

Json certificate_to_json(const TheoremCertificate& cert, bool include_rows) {
  const LieAlgebra& algebra = lie_algebra(cert.n);
  Json j;
  j["n"] = cert.n;
  j["d"] = cert.d;
  Json basis = Json::array();
  for (const auto& idx : algebra.indices()) basis.push_back(idx.label());
  j["basis"] = basis;
  j["unknowns"] = cert.unknowns;
  j["statistical_space_dim"] = cert.statistical_space_dim;
  j["constraint_rows"] = cert.constraint_rows;
  j["rank"] = cert.rank;
  j["kernel_dim"] = cert.kernel_dim;
  j["status"] = cert.passed() ? "PASS" : "FAILED";

  Json checks = Json::array();
  for (const auto& c : cert.checks) {
    Json item{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  j["checks"] = checks;

  Json kernel = Json::array();
  for (const auto& x : cert.kernel_vector) kernel.push_back(to_json(x));
  j["kernel_vector"] = kernel;

  Json pattern = Json::array();
  for (const auto& e : cert.nonzero_pattern)
    pattern.push_back({{"family", e.family}, {"entry", e.label}, {"triple", triple_json(e.triple)},
                       {"value_over_p", to_json(e.coefficient)}});
  j["nonzero_pattern"] = pattern;

  Json cubic = Json::array();
  for (const auto& e : cert.cubic_entries)
    cubic.push_back({{"entry", e.label},
                     {"triple", triple_json(e.triple)},
                     {"expected", to_json(e.expected)},
                     {"computed", to_json(e.computed)},
                     {"match", e.expected == e.computed}});
  j["cubic_table"] = cubic;

  if (include_rows) {
    Json order = Json::array();
    for (const auto& t : cert.system.unknown_order) order.push_back(triple_json(t));
    j["unknown_order"] = order;
    Json rows = Json::array();
    for (std::size_t r = 0; r < cert.system.rows.size(); ++r) {
      const auto& l = cert.system.labels[r];
      Json entries = Json::array();
      for (const auto& [col, value] : cert.system.rows[r]) entries.push_back(Json::array({col, to_json(value)}));
      rows.push_back({{"label", Json::array({l.a, l.b, l.c, l.e})}, {"entries", entries}});
    }
    j["rows"] = rows;
  }
  return j;
}

}  // namespace normgeo
