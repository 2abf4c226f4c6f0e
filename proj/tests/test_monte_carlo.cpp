#include <doctest.h>

#include <cmath>
#include <random>

#include "normgeo/monte_carlo.hpp"
#include "test_support.hpp"

using namespace normgeo;
using namespace normgeo::testing;

namespace {

McOptions opts(std::size_t samples, std::uint64_t seed, unsigned threads = 0) {
  McOptions o;
  o.samples = samples;
  o.seed = seed;
  o.threads = threads;
  return o;
}

bool within(const McEstimate& e, double target, double k = 3.0) {
  return std::abs(e.value - target) <= k * e.standard_error;
}

double eval_form(const ScoreForm& f, const Vector& z) {
  double s = f.c;
  for (std::size_t i = 0; i < f.n; ++i) {
    s += f.b[i] * z(static_cast<Eigen::Index>(i));
    for (std::size_t j = 0; j < f.n; ++j)
      s += 0.5 * z(static_cast<Eigen::Index>(i)) * f.q[i * f.n + j] * z(static_cast<Eigen::Index>(j));
  }
  return s;
}

}  // namespace

TEST_CASE("zero samples is an error") {
  const ManifoldPoint p = ManifoldPoint::standard(1);
  const TangentVector t = TangentVector::mean_direction(1, 0);
  CHECK_THROWS_AS(mc_oracle_metric(p, t, t, opts(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(mc_oracle_cubic(p, t, t, t, opts(0, 1)), std::invalid_argument);
}

TEST_CASE("whitened score equals the analytic score at x = mu + A z") {
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const ManifoldPoint p = random_point(rng, n);
    const TangentVector t = random_tangent(rng, n);
    const ScoreForm f = whitened_score(p, t);
    const Vector z = random_vector(rng, n);
    const Vector x = p.mu() + p.chol() * z;
    CHECK(relative_error(eval_form(f, z), score(p, t, x)) <= 1e-10);
  }
}

TEST_CASE("shard seeds are distinct and reproducible") {
  CHECK(shard_seed(1, 0) == shard_seed(1, 0));
  CHECK(shard_seed(1, 0) != shard_seed(1, 1));
  CHECK(shard_seed(1, 0) != shard_seed(2, 0));
}

TEST_CASE("worked examples") {
  const ManifoldPoint p1 = ManifoldPoint::standard(1);
  const TangentVector m1 = TangentVector::mean_direction(1, 0);
  const McEstimate g = mc_oracle_metric(p1, m1, m1, opts(1'000'000, 7));
  CHECK(g.samples == 1'000'000);
  CHECK(g.standard_error > 0);
  CHECK(within(g, 1.0));

  const ManifoldPoint p2 = ManifoldPoint::standard(2);
  const TangentVector m = TangentVector::mean_direction(2, 0), c = TangentVector::cov_direction(2, 0, 1);
  CHECK(within(mc_oracle_metric(p2, m, c, opts(1'000'000, 8)), 0.0));

  const TangentVector m2 = TangentVector::mean_direction(2, 1);
  CHECK(within(mc_oracle_cubic(p2, m, m2, m, opts(1'000'000, 9)), 0.0));

  const TangentVector s11 = TangentVector::cov_direction(1, 0, 0);
  CHECK(within(mc_oracle_cubic(p1, s11, m1, m1, opts(1'000'000, 10)), 1.0));
}

TEST_CASE("estimates match closed forms at random points (n <= 3)") {
  Rng rng(72);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const ManifoldPoint p = random_point(rng, n);
      const TangentVector s = random_tangent(rng, n), t = random_tangent(rng, n), w = random_tangent(rng, n);
      const std::uint64_t seed = 100 + 10 * n + static_cast<std::uint64_t>(trial);
      CHECK(within(mc_oracle_metric(p, s, t, opts(1'000'000, seed)), fisher_metric(p, s, t)));
      CHECK(within(mc_oracle_cubic(p, s, t, w, opts(1'000'000, seed)), amari_cubic(p, s, t, w)));
    }
}

TEST_CASE("cubic estimate is symmetric under argument permutation") {
  Rng rng(73);
  const ManifoldPoint p = random_point(rng, 2);
  const TangentVector s = random_tangent(rng, 2), t = random_tangent(rng, 2), w = random_tangent(rng, 2);
  // same seed: the integrand is identical up to the order of the product
  const McEstimate a = mc_oracle_cubic(p, s, t, w, opts(200'000, 5));
  const McEstimate b = mc_oracle_cubic(p, w, s, t, opts(200'000, 5));
  CHECK(std::abs(a.value - b.value) <= 1e-9 * (1 + std::abs(a.value)));
}

TEST_CASE("determinism: identical seed and any thread count give identical bits") {
  Rng rng(74);
  const ManifoldPoint p = random_point(rng, 3);
  const TangentVector s = random_tangent(rng, 3), t = random_tangent(rng, 3);
  const McEstimate ref = mc_oracle_metric(p, s, t, opts(300'001, 11, 1));
  for (unsigned threads : {1u, 2u, 3u, 8u}) {
    const McEstimate e = mc_oracle_metric(p, s, t, opts(300'001, 11, threads));
    CHECK(e.value == ref.value);
    CHECK(e.standard_error == ref.standard_error);
  }
  const McEstimate other = mc_oracle_metric(p, s, t, opts(300'001, 12, 1));
  CHECK(other.value != ref.value);
}

TEST_CASE("partial shards and tiny sample counts") {
  const ManifoldPoint p = ManifoldPoint::standard(1);
  const TangentVector m = TangentVector::mean_direction(1, 0);
  for (std::size_t samples : {1ul, 3ul, 4ul, 5ul, 65535ul, 65536ul, 65537ul}) {
    const McEstimate e = mc_oracle_metric(p, m, m, opts(samples, 3));
    CHECK(e.samples == samples);
    CHECK(std::isfinite(e.value));
    CHECK(e.standard_error >= 0);
  }
}

TEST_CASE("product kernels: explicit sums and variant agreement") {
  Rng rng(75);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t nforms = 1; nforms <= 3; ++nforms) {
      std::vector<ScoreForm> forms;
      for (std::size_t k = 0; k < nforms; ++k) forms.push_back(whitened_score(random_point(rng, n), random_tangent(rng, n)));
      const std::size_t count = 1003;
      std::vector<std::vector<double>> cols(n, std::vector<double>(count));
      std::normal_distribution<double> normal;
      for (auto& col : cols)
        for (double& v : col) v = normal(rng);
      std::vector<const double*> z;
      for (auto& col : cols) z.push_back(col.data());

      double sum = 0, sq = 0;
      for (std::size_t i = 0; i < count; ++i) {
        Vector zi(static_cast<Eigen::Index>(n));
        for (std::size_t r = 0; r < n; ++r) zi(static_cast<Eigen::Index>(r)) = cols[r][i];
        double prod = 1;
        for (const auto& f : forms) prod *= eval_form(f, zi);
        sum += prod;
        sq += prod * prod;
      }
      const MomentSums s = product_moments_scalar(forms.data(), nforms, z.data(), count);
      CHECK(relative_error(s.sum, sum) <= 1e-11 * (1 + std::abs(sq)));
      CHECK(relative_error(s.sum_sq, sq) <= 1e-11);
#if defined(NORMGEO_HAVE_AVX2_KERNEL)
      if (avx2_available()) {
        const MomentSums v = product_moments_avx2(forms.data(), nforms, z.data(), count);
        CHECK(relative_error(v.sum, s.sum) <= 1e-11 * (1 + std::abs(s.sum_sq)));
        CHECK(relative_error(v.sum_sq, s.sum_sq) <= 1e-11);
      }
#endif
    }
  CHECK_THROWS_AS(product_moments_scalar(nullptr, 0, nullptr, 0), std::invalid_argument);
}

TEST_CASE("forcing the scalar kernel gives a statistically consistent estimate") {
  const ManifoldPoint p = ManifoldPoint::standard(2);
  const TangentVector s = TangentVector::cov_direction(2, 0, 1);
  McOptions o = opts(400'000, 21);
  o.kernel = product_moments_scalar;
  const McEstimate a = mc_oracle_metric(p, s, s, o);
  CHECK(within(a, fisher_metric(p, s, s)));
  o.kernel = nullptr;
  const McEstimate b = mc_oracle_metric(p, s, s, o);
  // same samples, only summation rounding differs
  CHECK(std::abs(a.value - b.value) <= 1e-12 * std::abs(a.value));
  CHECK(!product_moments_variant().empty());
}
