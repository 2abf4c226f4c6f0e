// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "normgeo/cli.hpp"
#include "normgeo/connection.hpp"
#include "normgeo/monte_carlo.hpp"
#include "normgeo/symmetry_solver.hpp"
#include "reference_tables.hpp"

using namespace normgeo;
using namespace normgeo::testing;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (passed) detail << "first failure: " << what << "; ";
      passed = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Kernel value at a basis triple, read from the certificate.
QSqrt2 kernel_at(const TheoremCertificate& cert, std::size_t a, std::size_t b, std::size_t c) {
  std::array<std::size_t, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  for (std::size_t col = 0; col < cert.system.unknown_order.size(); ++col)
    if (cert.system.unknown_order[col] == t) return cert.kernel_vector[col];
  return QSqrt2();
}

// Hand-built pattern at p = 1.
SymTensor3 hand_pattern(const LieAlgebra& alg) {
  const std::size_t n = alg.n();
  const QSqrt2 half_root2 = QSqrt2::from_fractions(0, 1, 1, 2);
  SymTensor3 k(alg.dim());
  for (std::size_t i = 1; i <= n; ++i) {
    k(M(alg, i), M(alg, i), C(alg, i, i)) = QSqrt2(1);
    k(C(alg, i, i), C(alg, i, i), C(alg, i, i)) = QSqrt2(2);
    for (std::size_t j = i + 1; j <= n; ++j) {
      k(C(alg, i, i), C(alg, i, j), C(alg, i, j)) = QSqrt2(1);
      k(C(alg, j, j), C(alg, i, j), C(alg, i, j)) = QSqrt2(1);
      k(M(alg, i), M(alg, j), C(alg, i, j)) = half_root2;
      for (std::size_t l = j + 1; l <= n; ++l) k(C(alg, i, l), C(alg, i, j), C(alg, j, l)) = half_root2;
    }
  }
  return k;
}

// The six tabulated cubic values.
SymTensor3 hand_cubic(const LieAlgebra& alg) {
  const std::size_t n = alg.n();
  SymTensor3 c(alg.dim());
  for (std::size_t i = 1; i <= n; ++i) {
    c(C(alg, i, i), M(alg, i), M(alg, i)) = kRoot2;
    c(C(alg, i, i), C(alg, i, i), C(alg, i, i)) = QSqrt2(0, 2);
    for (std::size_t j = i + 1; j <= n; ++j) {
      c(C(alg, i, j), M(alg, i), M(alg, j)) = QSqrt2(1);
      c(C(alg, i, i), C(alg, i, j), C(alg, i, j)) = kRoot2;
      c(C(alg, j, j), C(alg, i, j), C(alg, i, j)) = kRoot2;
      for (std::size_t k = j + 1; k <= n; ++k) c(C(alg, i, j), C(alg, j, k), C(alg, i, k)) = QSqrt2(1);
    }
  }
  return c;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const TheoremCertificate cert = verify_theorem(n);
    const LieAlgebra& alg = lie_algebra(n);
    o.require(cert.passed(), tag + " certificate status");
    o.require(cert.kernel_dim == 1, tag + " kernel_dim");
    if (cert.kernel_dim != 1) continue;
    const SymTensor3 want = hand_pattern(alg);
    const QSqrt2 p = QSqrt2::from_fractions(0, 1, -1, 2);
    const SymTensor3 cubic = hand_cubic(alg);
    for (std::size_t s = 0; s < want.size(); ++s) {
      const auto [a, b, c] = want.triple(s);
      const QSqrt2 got = kernel_at(cert, a, b, c);
      o.require(got == want.values()[s], tag + " kernel entry " + alg.index(a).label() + "," + alg.index(b).label() +
                                             "," + alg.index(c).label());
      o.require(QSqrt2(-2) * p * got == cubic.values()[s], tag + " cubic value at p = -sqrt2/2");
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 5.0, "runtime");
  o.detail << "n=1..3 in " << secs << " s";
  const auto t4 = std::chrono::steady_clock::now();
  const TheoremCertificate c4 = verify_theorem(4);
  o.detail << "; optional n=4 " << (c4.passed() ? "PASS" : "FAILED") << " in " << seconds_since(t4) << " s";
  o.require(c4.passed(), "n=4 certificate status");
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    const LieAlgebra& alg = lie_algebra(n);
    for (int a : {1, -1})
      o.require(curvature(alg, alpha_connection(alg, QSqrt2(a))).is_zero(),
                "n=" + std::to_string(n) + " alpha=" + std::to_string(a));
  }
  o.detail << "R(+1) = R(-1) = 0 exactly for n = 1..3";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const QSqrt2 alphas[] = {QSqrt2(0), QSqrt2(1), QSqrt2(-1), QSqrt2(2), QSqrt2(-2),
                           QSqrt2::from_fractions(1, 2), QSqrt2::from_fractions(-1, 2)};
  for (std::size_t n = 1; n <= 3; ++n) {
    const LieAlgebra& alg = lie_algebra(n);
    for (const QSqrt2& a : alphas) {
      const std::string tag = "n=" + std::to_string(n) + " alpha=" + a.to_string();
      const ConnCoeffs conn = alpha_connection(alg, a);
      const CurvatureTensor r = curvature(alg, conn);
      const CurvatureTensor r_star = curvature(alg, conjugate(conn));
      o.require(r.r == r_star.r, tag + " R = R*");
      // the conjugate of the alpha connection is the -alpha connection
      o.require(conjugate(conn).gamma == alpha_connection(alg, -a).gamma, tag + " conjugate is -alpha");
    }
  }
  o.detail << "alpha in {0, +-1, +-2, +-1/2}, n = 1..3";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const LieAlgebra& alg = lie_algebra(n);
    const Tensor3& lc = alg.levi_civita().gamma;
    const Table printed = reference_levi_civita(alg);
    const Table forced = torsion_forced_levi_civita(alg);
    for (std::size_t a = 0; a < alg.dim(); ++a)
      for (std::size_t b = 0; b < alg.dim(); ++b) {
        QVector want(alg.dim());
        if (auto it = printed.find({a, b}); it != printed.end()) want = it->second;
        if (auto it = forced.find({a, b}); it != forced.end()) want = it->second;
        o.require(slice(lc, a, b) == want, "n=" + std::to_string(n) + " nabla_" + alg.index(a).label() + " " +
                                               alg.index(b).label());
        if (alg.index(a).is_diagonal()) o.require(slice(lc, a, b) == QVector(alg.dim()), "e_ii direction");
        ++checked;
      }
  }
  o.detail << checked << " (direction, field) pairs, n = 1..4";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const LieAlgebra& alg = lie_algebra(n);
    const std::size_t d = alg.dim();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) o.require(alg.inner(a, b) == QSqrt2(a == b ? 1 : 0), tag + " orthonormal");
    // brackets recomputed from matrix commutators
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const QMatrix comm = alg.matrix(a) * alg.matrix(b) - alg.matrix(b) * alg.matrix(a);
        o.require(alg.expand(comm) == alg.bracket(a, b), tag + " commutator");
      }
    const Tensor3& sc = alg.structure_constants();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c)
          for (std::size_t e = 0; e < d; ++e) {
            QSqrt2 jac;
            for (std::size_t f = 0; f < d; ++f)
              jac += sc(b, c, f) * sc(a, f, e) + sc(c, a, f) * sc(b, f, e) + sc(a, b, f) * sc(c, f, e);
            o.require(jac.is_zero(), tag + " Jacobi");
          }
    o.require(is_torsion_free(alg, alg.levi_civita()), tag + " torsion-free");
    const Tensor3& lc = alg.levi_civita().gamma;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) o.require((lc(a, b, c) + lc(a, c, b)).is_zero(), tag + " metric compatible");
    const auto series = alg.derived_series_dims();
    o.require(series.front() == d && series.back() == 0, tag + " derived series");
  }
  o.detail << "orthonormality, commutators, Jacobi, torsion, compatibility, derived series for n = 1..4";
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(20260101);
  std::size_t total = 0, all_true = 0, all_false = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const LieAlgebra& alg = lie_algebra(n);
    const SymTensor3 ka = amari_difference(alg);
    for (int trial = 0; trial < 210; ++trial) {
      SymTensor3 k(alg.dim());
      switch (trial % 5) {
        case 0: k = random_sym(rng, alg.dim()); break;
        case 1: k = random_sym(rng, alg.dim(), 0.2); break;
        case 2: k = ka.scaled(random_qsqrt2(rng)); break;
        case 3: {
          k = ka.scaled(random_nonzero(rng));
          k.values()[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(k.size()) - 1))] +=
              random_nonzero(rng);
          break;
        }
        default: {
          // a K^A multiple plus a sparse perturbation
          const SymTensor3 noise = random_sym(rng, alg.dim(), 0.05);
          k = ka.scaled(random_qsqrt2(rng));
          for (std::size_t s = 0; s < k.size(); ++s) k.values()[s] += noise.values()[s];
        }
      }
      const PredicateSuite ps = predicate_suite(alg, k);
      o.require(ps.agree(), "n=" + std::to_string(n) + " trial " + std::to_string(trial));
      ++total;
      if (ps.all()) ++all_true;
      if (!ps.conjugate_symmetric && !ps.nabla_c_symmetric && !ps.nabla_hat_c_symmetric && !ps.nabla_hat_k_symmetric)
        ++all_false;
    }
  }
  o.require(all_true > 0 && all_false > 0, "both outcomes exercised");
  o.detail << total << " samples (" << all_true << " all-true, " << all_false << " all-false)";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(777);
  std::size_t runs = 0;
  double worst_z = 0, worst_fd = 0;
  for (std::size_t n = 1; n <= 2; ++n)
    for (int set = 0; set < 5; ++set) {
      const ManifoldPoint p = random_point(rng, n);
      const TangentVector s = random_tangent(rng, n), t = random_tangent(rng, n), w = random_tangent(rng, n);
      McOptions opts;
      opts.samples = 1'000'000;
      opts.seed = 1000 + 10 * n + static_cast<std::uint64_t>(set);
      const McEstimate g = mc_oracle_metric(p, s, t, opts);
      const McEstimate c = mc_oracle_cubic(p, s, t, w, opts);
      const double zg = std::abs(g.value - fisher_metric(p, s, t)) / g.standard_error;
      const double zc = std::abs(c.value - amari_cubic(p, s, t, w)) / c.standard_error;
      worst_z = std::max({worst_z, zg, zc});
      const std::string tag = "n=" + std::to_string(n) + " set " + std::to_string(set);
      o.require(zg <= 3, tag + " metric");
      o.require(zc <= 3, tag + " cubic");
      runs += 2;
      // finite differences of log p along each direction at 5 sample points
      const double h = 1e-5;
      for (int k = 0; k < 5; ++k) {
        const Vector x = p.mu() + p.chol() * random_vector(rng, n);
        for (const TangentVector* dir : {&s, &t, &w}) {
          const ManifoldPoint plus = ManifoldPoint::make(p.sigma() + h * dir->x(), p.mu() + h * dir->v());
          const ManifoldPoint minus = ManifoldPoint::make(p.sigma() - h * dir->x(), p.mu() - h * dir->v());
          const double fd = (log_pdf(plus, x) - log_pdf(minus, x)) / (2 * h);
          const double err = relative_error(score(p, *dir, x), fd);
          worst_fd = std::max(worst_fd, err);
          o.require(err <= 1e-6, tag + " finite difference");
        }
      }
    }
  o.detail << runs << " estimates at 1e6 samples, max |z| = " << worst_z << ", max FD error = " << worst_fd;
  return o;
}

Outcome criterion8() {
  Outcome o;
  Rng rng(888);
  double worst = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const GroupElement g = random_element(rng, n);
      const ManifoldPoint p = random_point(rng, n);
      const TangentVector s = random_tangent(rng, n), t = random_tangent(rng, n), w = random_tangent(rng, n);
      const ManifoldPoint q = act(g, p);
      const TangentVector gs = act_tangent(g, s), gt = act_tangent(g, t), gw = act_tangent(g, w);
      const double e1 = relative_difference(fisher_metric(q, gs, gt), fisher_metric(p, s, t));
      const double e2 = relative_difference(amari_cubic(q, gs, gt, gw), amari_cubic(p, s, t, w));
      const double e3 = relative_difference(fisher_metric(p, s, t),
                                            pull_back_to_identity(p, s).dot(pull_back_to_identity(p, t)));
      worst = std::max({worst, e1, e2, e3});
      const std::string tag = "n=" + std::to_string(n) + " trial " + std::to_string(trial);
      o.require(e1 <= 1e-9, tag + " metric invariance");
      o.require(e2 <= 1e-9, tag + " cubic invariance");
      o.require(e3 <= 1e-9, tag + " pull-back");
    }
  o.detail << "60 (g, p) pairs, max relative deviation " << worst;
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome criterion9() {
  Outcome o;
  auto verify_run = [](const std::string& cert_path) {
    RunConfig cfg;
    cfg.subcommand = "verify";
    cfg.certificate_path = cert_path;
    const RunResult r = run(cfg);
    return std::make_pair(r.output, slurp(cert_path));
  };
  const auto a = verify_run("acceptance_cert_a.json");
  const auto b = verify_run("acceptance_cert_b.json");
  o.require(!a.first.empty() && a.first == b.first, "verify report");
  o.require(!a.second.empty() && a.second == b.second, "certificate");
  std::remove("acceptance_cert_a.json");
  std::remove("acceptance_cert_b.json");

  auto oracle_run = [](unsigned threads) {
    RunConfig cfg;
    cfg.subcommand = "oracle";
    cfg.n = 2;
    cfg.samples = 300'000;
    cfg.seed = 99;
    cfg.threads = threads;
    return run(cfg).output;
  };
  const std::string ref = oracle_run(1);
  for (unsigned threads : {1u, 2u, 4u, 0u}) o.require(oracle_run(threads) == ref, "oracle report");

  for (const char* what : {"brackets", "u-map", "levi-civita", "cubic", "metric"}) {
    RunConfig cfg;
    cfg.subcommand = "tensors";
    cfg.n = 3;
    cfg.what = what;
    o.require(run(cfg).output == run(cfg).output, std::string("tensors ") + what);
  }
  o.detail << "certificate " << a.second.size() << " bytes; reports identical across reruns and thread counts";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"exact verification n=1..3: kernel_dim 1, pattern, ratios, cubic table", criterion1},
      {"dual flatness: R(+1) = R(-1) = 0", criterion2},
      {"conjugate symmetry of the alpha family", criterion3},
      {"Levi-Civita table and vanishing e_ii directions, n <= 4", criterion4},
      {"algebra sanity, n <= 4", criterion5},
      {"equivalence of the four predicates on random K", criterion6},
      {"closed forms vs Monte-Carlo oracle; score vs finite differences", criterion7},
      {"left-invariance and pull-back isometry", criterion8},
      {"determinism of certificates and reports", criterion9},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << index << "] " << name << " -- " << o.detail.str() << "\n"
              << std::flush;
    if (!o.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
