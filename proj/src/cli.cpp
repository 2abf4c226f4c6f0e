#include "normgeo/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "normgeo/affine_group.hpp"
#include "normgeo/connection.hpp"
#include "normgeo/json_io.hpp"
#include "normgeo/monte_carlo.hpp"
#include "normgeo/symmetry_solver.hpp"

namespace normgeo {

namespace {

// Thrown for bad user input; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string term(const QSqrt2& coef, const std::string& label, bool first) {
  const bool negative = coef.sign() < 0;
  const QSqrt2 mag = negative ? -coef : coef;
  std::string body;
  if (mag == QSqrt2(1)) {
    body = label;
  } else {
    std::string p = mag.pretty();
    if (p.find(' ') != std::string::npos) p = "(" + p + ")";
    body = p + " · " + label;
  }
  if (first) return negative ? "-" + body : body;
  return (negative ? " - " : " + ") + body;
}

std::string combination(const LieAlgebra& algebra, const QVector& coords) {
  std::string out;
  for (std::size_t c = 0; c < coords.size(); ++c)
    if (!coords[c].is_zero()) out += term(coords[c], algebra.index(c).label(), out.empty());
  return out.empty() ? "0" : out;
}

Json components(const LieAlgebra& algebra, const QVector& coords, bool as_float) {
  Json out = Json::object();
  for (std::size_t c = 0; c < coords.size(); ++c)
    if (!coords[c].is_zero()) out[algebra.index(c).label()] = render(coords[c], as_float);
  return out;
}

Json labels(const LieAlgebra& algebra, std::initializer_list<std::size_t> idx) {
  Json out = Json::array();
  for (std::size_t k : idx) out.push_back(algebra.index(k).label());
  return out;
}

QVector slice(const Tensor3& t, std::size_t a, std::size_t b) {
  QVector out(t.dim());
  for (std::size_t c = 0; c < t.dim(); ++c) out[c] = t(a, b, c);
  return out;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Json basis_json(const LieAlgebra& algebra) {
  Json out = Json::array();
  for (const auto& idx : algebra.indices()) out.push_back({{"label", idx.label()}, {"name", idx.name()}});
  return out;
}

Json header(const RunConfig& cfg) { return Json{{"schema", kReportSchema}, {"command", cfg.subcommand}}; }

// Entries of a connection-like table: "<prefix>_{e_a}e_b = ...".
Json connection_entries(const LieAlgebra& algebra, const Tensor3& gamma, const std::string& symbol, bool as_float) {
  Json entries = Json::array();
  const std::size_t d = algebra.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const QVector v = slice(gamma, a, b);
      if (is_zero(v)) continue;
      entries.push_back({{"args", labels(algebra, {a, b})},
                         {"components", components(algebra, v, as_float)},
                         {"formula", symbol + "_{" + algebra.index(a).label() + "}" + algebra.index(b).label() +
                                         " = " + combination(algebra, v)}});
    }
  return entries;
}

Json do_tensors(const RunConfig& cfg) {
  const LieAlgebra& algebra = lie_algebra(cfg.n);
  const std::size_t d = algebra.dim();
  Json r = header(cfg);
  r["n"] = cfg.n;
  r["what"] = cfg.what;
  r["basis"] = basis_json(algebra);
  Json entries = Json::array();
  if (cfg.what == "brackets") {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) {
        const QVector v = algebra.bracket(a, b);
        if (is_zero(v)) continue;
        entries.push_back({{"args", labels(algebra, {a, b})},
                           {"components", components(algebra, v, cfg.as_float)},
                           {"formula", "[" + algebra.index(a).label() + ", " + algebra.index(b).label() +
                                           "] = " + combination(algebra, v)}});
      }
  } else if (cfg.what == "u-map") {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a; b < d; ++b) {
        const QVector v = algebra.u_map(a, b);
        if (is_zero(v)) continue;
        entries.push_back({{"args", labels(algebra, {a, b})},
                           {"components", components(algebra, v, cfg.as_float)},
                           {"formula", "U(" + algebra.index(a).label() + ", " + algebra.index(b).label() +
                                           ") = " + combination(algebra, v)}});
      }
  } else if (cfg.what == "levi-civita") {
    entries = connection_entries(algebra, algebra.levi_civita().gamma, "∇̂", cfg.as_float);
  } else if (cfg.what == "cubic") {
    const SymTensor3& c = algebra.cubic();
    for (std::size_t s = 0; s < c.size(); ++s) {
      if (c.values()[s].is_zero()) continue;
      auto [x, y, z] = c.triple(s);
      entries.push_back({{"args", labels(algebra, {x, y, z})},
                         {"value", render(c.values()[s], cfg.as_float)},
                         {"formula", "C(" + algebra.index(x).label() + ", " + algebra.index(y).label() + ", " +
                                         algebra.index(z).label() + ") = " + c.values()[s].pretty()}});
    }
  } else if (cfg.what == "metric") {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a; b < d; ++b) {
        const QSqrt2& g = algebra.inner(a, b);
        if (g.is_zero()) continue;
        entries.push_back({{"args", labels(algebra, {a, b})},
                           {"value", render(g, cfg.as_float)},
                           {"formula", "g(" + algebra.index(a).label() + ", " + algebra.index(b).label() +
                                           ") = " + g.pretty()}});
      }
  } else {
    throw UsageError("unknown --what: " + cfg.what);
  }
  r["entries"] = entries;
  return r;
}

QSqrt2 parse_alpha(const std::string& text) {
  try {
    return QSqrt2::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("invalid --alpha '" + text + "': " + e.what());
  }
}

Json do_connection(const RunConfig& cfg, int& code) {
  const LieAlgebra& algebra = lie_algebra(cfg.n);
  const std::size_t d = algebra.dim();
  const QSqrt2 alpha = parse_alpha(cfg.alpha);
  const SymTensor3 k = amari_difference(algebra).scaled(alpha);
  const ConnCoeffs conn = from_difference(algebra, k);
  Json r = header(cfg);
  r["n"] = cfg.n;
  r["alpha"] = to_json(alpha);
  r["what"] = cfg.what;
  r["basis"] = basis_json(algebra);
  if (cfg.what == "coeffs") {
    r["entries"] = connection_entries(algebra, conn.gamma, "∇", cfg.as_float);
  } else if (cfg.what == "conjugate") {
    r["entries"] = connection_entries(algebra, conjugate(conn).gamma, "∇*", cfg.as_float);
  } else if (cfg.what == "curvature") {
    const CurvatureTensor curv = curvature(algebra, conn);
    Json entries = Json::array();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) {
          QVector v(d);
          for (std::size_t e = 0; e < d; ++e) v[e] = curv.r(a, b, c, e);
          if (is_zero(v)) continue;
          entries.push_back({{"args", labels(algebra, {a, b, c})},
                             {"components", components(algebra, v, cfg.as_float)},
                             {"formula", "R(" + algebra.index(a).label() + ", " + algebra.index(b).label() + ")" +
                                             algebra.index(c).label() + " = " + combination(algebra, v)}});
        }
    r["zero"] = curv.is_zero();
    r["entries"] = entries;
  } else if (cfg.what == "predicates") {
    const PredicateSuite ps = predicate_suite(algebra, k);
    r["torsion_free"] = is_torsion_free(algebra, conn);
    r["conjugate_symmetric"] = ps.conjugate_symmetric;
    r["nabla_c_totally_symmetric"] = ps.nabla_c_symmetric;
    r["nabla_hat_c_totally_symmetric"] = ps.nabla_hat_c_symmetric;
    r["nabla_hat_k_totally_symmetric"] = ps.nabla_hat_k_symmetric;
    r["all"] = ps.all();
    if (!ps.all() || !is_torsion_free(algebra, conn)) code = exit_code::kCheckFailed;
  } else {
    throw UsageError("unknown --what: " + cfg.what);
  }
  return r;
}

ManifoldPoint point_from(const RunConfig& cfg) {
  if (cfg.sigma.empty() != cfg.mu.empty()) throw UsageError("--sigma and --mu must be given together");
  if (cfg.sigma.empty()) return ManifoldPoint::standard(cfg.n);
  return ManifoldPoint::make(matrix_from_json(parse_json_argument(cfg.sigma)),
                             vector_from_json(parse_json_argument(cfg.mu)));
}

TangentVector tangent_from(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return tangent_from_json(parse_json_argument(text));
}

Json point_json(const ManifoldPoint& p) { return Json{{"sigma", to_json(p.sigma())}, {"mu", to_json(p.mu())}}; }

Json do_metric(const RunConfig& cfg) {
  const ManifoldPoint p = point_from(cfg);
  const TangentVector s = tangent_from(cfg.s, "--s"), t = tangent_from(cfg.t, "--t");
  Json r = header(cfg);
  r["point"] = point_json(p);
  r["value"] = round15(fisher_metric(p, s, t));
  return r;
}

Json do_cubic(const RunConfig& cfg) {
  const ManifoldPoint p = point_from(cfg);
  const TangentVector s = tangent_from(cfg.s, "--s"), t = tangent_from(cfg.t, "--t"), w = tangent_from(cfg.w, "--w");
  Json r = header(cfg);
  r["point"] = point_json(p);
  r["value"] = round15(amari_cubic(p, s, t, w));
  if (cfg.alpha_given) {
    const QSqrt2 alpha = parse_alpha(cfg.alpha);
    r["alpha"] = to_json(alpha);
    r["alpha_connection_form"] = round15(alpha_connection_form(p, alpha.to_double(), s, t, w));
  }
  return r;
}

// log p moved along t by +-h, central difference.
double finite_difference_score(const ManifoldPoint& p, const TangentVector& t, const Vector& x, double h) {
  const ManifoldPoint plus = ManifoldPoint::make(p.sigma() + h * t.x(), p.mu() + h * t.v());
  const ManifoldPoint minus = ManifoldPoint::make(p.sigma() - h * t.x(), p.mu() - h * t.v());
  return (log_pdf(plus, x) - log_pdf(minus, x)) / (2 * h);
}

Json estimate_json(double closed, const McEstimate& e) {
  const double diff = e.value - closed;
  const bool ok = std::abs(diff) <= 3 * e.standard_error;
  return Json{{"closed_form", round15(closed)},
              {"estimate", round15(e.value)},
              {"standard_error", round15(e.standard_error)},
              {"z_score", e.standard_error > 0 ? round15(diff / e.standard_error) : 0.0},
              {"within_3se", ok}};
}

Json do_oracle(const RunConfig& cfg, int& code) {
  const ManifoldPoint p = point_from(cfg);
  const std::size_t n = p.n();
  const TangentVector s = cfg.s.empty() ? TangentVector::mean_direction(n, 0) : tangent_from(cfg.s, "--s");
  const TangentVector t = cfg.t.empty() ? TangentVector::mean_direction(n, 0) : tangent_from(cfg.t, "--t");
  const TangentVector w = cfg.w.empty() ? TangentVector::cov_direction(n, 0, 0) : tangent_from(cfg.w, "--w");
  McOptions opts;
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  const McEstimate gm = mc_oracle_metric(p, s, t, opts);
  const McEstimate cm = mc_oracle_cubic(p, s, t, w, opts);

  Json r = header(cfg);
  r["point"] = point_json(p);
  r["directions"] = {{"s", to_json(s)}, {"t", to_json(t)}, {"w", to_json(w)}};
  r["samples"] = cfg.samples;
  r["seed"] = cfg.seed;
  r["metric"] = estimate_json(fisher_metric(p, s, t), gm);
  r["cubic"] = estimate_json(amari_cubic(p, s, t, w), cm);

  // analytic score against central differences of log p at seeded sample points
  std::mt19937_64 rng(shard_seed(cfg.seed, ~0ULL));
  std::normal_distribution<double> normal;
  double worst = 0;
  for (int k = 0; k < 5; ++k) {
    Vector z(static_cast<Eigen::Index>(n));
    for (auto& zi : z) zi = normal(rng);
    const Vector x = p.mu() + p.chol() * z;
    for (const TangentVector* dir : {&s, &t, &w})
      worst = std::max(worst, relative_error(score(p, *dir, x), finite_difference_score(p, *dir, x, 1e-5)));
  }
  const bool fd_ok = worst <= 1e-6;
  r["score_finite_difference"] = {{"step", 1e-5}, {"max_relative_error", worst}, {"passed", fd_ok}};
  const bool pass = r["metric"]["within_3se"].get<bool>() && r["cubic"]["within_3se"].get<bool>() && fd_ok;
  r["status"] = pass ? "PASS" : "FAILED";
  if (!pass) code = exit_code::kCheckFailed;
  return r;
}

GroupElement element_from(const RunConfig& cfg) {
  if (cfg.a.empty() || cfg.b.empty()) throw UsageError("--a and --b are required");
  return GroupElement::make(matrix_from_json(parse_json_argument(cfg.a)), vector_from_json(parse_json_argument(cfg.b)));
}

Json element_json(const GroupElement& g) { return Json{{"a", to_json(g.a())}, {"b", to_json(g.b())}}; }

Json do_group(const RunConfig& cfg) {
  Json r = header(cfg);
  r["mode"] = cfg.group_mode;
  if (cfg.group_mode == "act") {
    const GroupElement g = element_from(cfg);
    if (cfg.sigma.empty()) throw UsageError("--act needs --sigma and --mu");
    const ManifoldPoint p = point_from(cfg);
    r["result"] = point_json(act(g, p));
    if (!cfg.x.empty() || !cfg.v.empty()) {
      if (cfg.x.empty() || cfg.v.empty()) throw UsageError("--x and --v must be given together");
      const TangentVector t = TangentVector::make(matrix_from_json(parse_json_argument(cfg.x)),
                                                  vector_from_json(parse_json_argument(cfg.v)));
      r["tangent"] = to_json(act_tangent(g, t));
    }
  } else if (cfg.group_mode == "phi") {
    r["result"] = point_json(phi(element_from(cfg)));
  } else if (cfg.group_mode == "phi-inv") {
    if (cfg.sigma.empty()) throw UsageError("--phi-inv needs --sigma and --mu");
    r["result"] = element_json(phi_inv(point_from(cfg)));
  } else if (cfg.group_mode == "pullback") {
    if (cfg.sigma.empty() || cfg.x.empty() || cfg.v.empty())
      throw UsageError("--pullback needs --sigma, --mu, --x and --v");
    const ManifoldPoint p = point_from(cfg);
    const TangentVector t = TangentVector::make(matrix_from_json(parse_json_argument(cfg.x)),
                                                vector_from_json(parse_json_argument(cfg.v)));
    const Vector c = pull_back_to_identity(p, t);
    const LieAlgebra& algebra = lie_algebra(p.n());
    Json coeffs = Json::object();
    for (std::size_t k = 0; k < algebra.dim(); ++k) coeffs[algebra.index(k).label()] = round15(c(k));
    r["coefficients"] = coeffs;
    r["fisher_norm_sq"] = round15(fisher_metric(p, t, t));
    r["flat_norm_sq"] = round15(c.squaredNorm());
  } else {
    throw UsageError("group: choose one of --act, --phi, --phi-inv, --pullback");
  }
  return r;
}

Json do_verify(const RunConfig& cfg, int& code, Json* certificate) {
  std::size_t lo = 1, hi = 3;
  if (cfg.max_n > 0) {
    hi = cfg.max_n;
  } else if (cfg.n_given) {
    lo = hi = cfg.n;
  }
  Json r = header(cfg);
  Json results = Json::array();
  Json cert_results = Json::array();
  bool all = true;
  for (std::size_t n = lo; n <= hi; ++n) {
    const TheoremCertificate cert = verify_theorem(n);
    all = all && cert.passed();
    results.push_back(certificate_to_json(cert, false));
    if (certificate) cert_results.push_back(certificate_to_json(cert, true));
  }
  r["results"] = results;
  r["status"] = all ? "PASS" : "FAILED";
  if (certificate) *certificate = Json{{"schema", kCertificateSchema}, {"status", r["status"]}, {"results", cert_results}};
  if (!all) code = exit_code::kCheckFailed;
  return r;
}

// ---- table rendering ----

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << " = " << scalar_text(j) << "\n";
  }
}

std::string verify_table(const Json& r) {
  std::ostringstream out;
  for (const auto& res : r["results"]) {
    out << "n=" << res["n"].get<std::size_t>() << " d=" << res["d"].get<std::size_t>()
        << " unknowns=" << res["unknowns"].get<std::size_t>() << " rows=" << res["constraint_rows"].get<std::size_t>()
        << " rank=" << res["rank"].get<std::size_t>() << " kernel_dim=" << res["kernel_dim"].get<std::size_t>()
        << " " << res["status"].get<std::string>() << "\n";
    for (const auto& c : res["checks"]) {
      out << "  [" << (c["passed"].get<bool>() ? "ok" : "FAIL") << "] " << c["name"].get<std::string>();
      if (c.contains("detail")) out << ": " << c["detail"].get<std::string>();
      out << "\n";
    }
    for (const auto& e : res["nonzero_pattern"])
      out << "  " << e["entry"].get<std::string>() << " = "
          << QSqrt2::parse(e["value_over_p"].get<std::string>()).pretty() << " p\n";
  }
  out << r["status"].get<std::string>() << "\n";
  return out.str();
}

std::string to_table(const Json& r) {
  const std::string cmd = r["command"].get<std::string>();
  if (cmd == "verify") return verify_table(r);
  std::ostringstream out;
  if (r.contains("entries")) {
    for (const auto& e : r["entries"]) out << e["formula"].get<std::string>() << "\n";
    if (r.contains("zero")) out << "zero = " << r["zero"].dump() << "\n";
    return out.str();
  }
  flatten(r, "", out);
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

RunResult run_impl(const RunConfig& cfg) {
  RunResult res;
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.format != "json" && cfg.format != "table") throw UsageError("--format must be json or table");
  int code = exit_code::kPass;
  Json report;
  Json certificate;
  const std::string& c = cfg.subcommand;
  if (c == "verify") {
    report = do_verify(cfg, code, cfg.certificate_path.empty() ? nullptr : &certificate);
  } else if (c == "tensors") {
    report = do_tensors(cfg);
  } else if (c == "connection") {
    report = do_connection(cfg, code);
  } else if (c == "metric") {
    report = do_metric(cfg);
  } else if (c == "cubic") {
    report = do_cubic(cfg);
  } else if (c == "oracle") {
    if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
    report = do_oracle(cfg, code);
  } else if (c == "group") {
    report = do_group(cfg);
  } else {
    throw UsageError("unknown subcommand '" + c + "'");
  }
  if (!cfg.certificate_path.empty() && c == "verify") write_file(cfg.certificate_path, certificate.dump(2) + "\n");
  res.output = cfg.format == "table" ? to_table(report) : report.dump(2) + "\n";
  res.exit_code = code;
  return res;
}

RunResult guarded_run(const RunConfig& cfg) {
  try {
    return run_impl(cfg);
  } catch (const std::exception& e) {
    RunResult res;
    res.exit_code = exit_code::kUsage;
    res.error = std::string("error: ") + e.what() + "\n";
    return res;
  }
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("NORMGEO_SEED");
  if (!env || !*env) return 1;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    if (env[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(env, &pos);
  } catch (const std::exception&) {
    throw UsageError(std::string("NORMGEO_SEED is not a non-negative integer: ") + env);
  }
  if (env[pos] != '\0') throw UsageError(std::string("NORMGEO_SEED is not a non-negative integer: ") + env);
  return v;
}

RunResult run(const RunConfig& config) { return guarded_run(config); }

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.seed = default_seed();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }

  CLI::App app{"Exact verification engine and numeric library for the Gaussian statistical manifold", "normgeo"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--output", cfg.output_path, "Write output to FILE instead of stdout");
  app.add_flag("--float", cfg.as_float, "Render exact scalars as 15-digit decimals");

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Dimension of the normal distribution")->check(CLI::Range(1, 64));
  };
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--sigma", cfg.sigma, "Covariance as JSON (row-major) or @file");
    sub->add_option("--mu", cfg.mu, "Mean as JSON array or @file");
  };
  auto add_tangents = [&](CLI::App* sub, bool with_w) {
    sub->add_option("--s", cfg.s, "Tangent {\"x\": [[..]], \"v\": [..]} as JSON or @file");
    sub->add_option("--t", cfg.t, "Tangent as JSON or @file");
    if (with_w) sub->add_option("--w", cfg.w, "Tangent as JSON or @file");
  };

  CLI::App* verify = app.add_subcommand("verify", "Certify the characterization for each n");
  add_n(verify);
  verify->add_option("--max-n", cfg.max_n, "Verify n = 1..M (default 1..3)")->check(CLI::Range(1, 8));
  verify->add_option("--emit-certificate", cfg.certificate_path, "Write the replayable certificate JSON to FILE");

  CLI::App* tensors = app.add_subcommand("tensors", "Dump exact Lie algebra tables");
  add_n(tensors);
  tensors->add_option("--what", cfg.what, "Table to dump")
      ->required()
      ->check(CLI::IsMember({"brackets", "u-map", "levi-civita", "cubic", "metric"}));

  CLI::App* connection = app.add_subcommand("connection", "Amari-Chentsov alpha-connection data");
  add_n(connection);
  connection->add_option("--alpha", cfg.alpha, "Exact alpha, e.g. 1, -1/2, 1/3");
  connection->add_option("--what", cfg.what, "Data to dump")
      ->required()
      ->check(CLI::IsMember({"coeffs", "curvature", "conjugate", "predicates"}));

  CLI::App* metric = app.add_subcommand("metric", "Fisher metric at a point");
  add_n(metric);
  add_point(metric);
  add_tangents(metric, false);

  CLI::App* cubic = app.add_subcommand("cubic", "Amari-Chentsov cubic form at a point");
  add_n(cubic);
  add_point(cubic);
  add_tangents(cubic, true);
  cubic->add_option("--alpha", cfg.alpha, "Also evaluate the alpha-connection form");

  CLI::App* oracle = app.add_subcommand("oracle", "Monte-Carlo check of the closed forms");
  add_n(oracle);
  add_point(oracle);
  add_tangents(oracle, true);
  oracle->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", cfg.seed, "Seed (default: NORMGEO_SEED or 1)");
  oracle->add_option("--threads", cfg.threads, "Worker threads (0 = all cores); does not affect results");

  CLI::App* group = app.add_subcommand("group", "Group action utilities");
  add_n(group);
  add_point(group);
  group->add_option("--a", cfg.a, "Upper-triangular A as JSON or @file");
  group->add_option("--b", cfg.b, "Translation b as JSON or @file");
  group->add_option("--x", cfg.x, "Tangent Sigma-direction as JSON or @file");
  group->add_option("--v", cfg.v, "Tangent mu-direction as JSON or @file");
  auto* f_act = group->add_flag("--act", "Apply (A,b) to (Sigma,mu) and optionally to (X,v)");
  auto* f_phi = group->add_flag("--phi", "(A,b) -> (A A^T, b)");
  auto* f_phi_inv = group->add_flag("--phi-inv", "(Sigma,mu) -> Cholesky element");
  auto* f_pull = group->add_flag("--pullback", "Coefficients of (X,v) at the identity");
  f_act->excludes(f_phi, f_phi_inv, f_pull);
  f_phi->excludes(f_phi_inv, f_pull);
  f_phi_inv->excludes(f_pull);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? exit_code::kPass : exit_code::kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.subcommand = sub->get_name();
  cfg.n_given = sub->count("--n") > 0;
  cfg.alpha_given = sub->get_option_no_throw("--alpha") != nullptr && sub->count("--alpha") > 0;
  if (sub == group) {
    if (f_act->count()) cfg.group_mode = "act";
    if (f_phi->count()) cfg.group_mode = "phi";
    if (f_phi_inv->count()) cfg.group_mode = "phi-inv";
    if (f_pull->count()) cfg.group_mode = "pullback";
  }
  if (cfg.max_n > 0 && cfg.n_given) {
    err << "error: --n and --max-n are mutually exclusive\n";
    return exit_code::kUsage;
  }

  RunResult res = guarded_run(cfg);
  if (res.exit_code == exit_code::kUsage) {
    err << res.error;
    return res.exit_code;
  }
  if (cfg.output_path.empty()) {
    out << res.output;
  } else {
    try {
      write_file(cfg.output_path, res.output);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return exit_code::kUsage;
    }
  }
  return res.exit_code;
}

}  // namespace normgeo
