#include "normgeo/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace normgeo {

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return mix(mix(seed) ^ shard);
}

ScoreForm whitened_score(const ManifoldPoint& p, const TangentVector& t) {
  if (p.n() != t.n()) throw std::invalid_argument("whitened_score: dimension mismatch");
  const Matrix& si = p.sigma_inv();
  const Matrix& a = p.chol();
  const Matrix q = a.transpose() * si * t.x() * si * a;
  const Vector b = a.transpose() * (si * t.v());
  ScoreForm f;
  f.n = p.n();
  f.c = -0.5 * (si * t.x()).trace();
  f.b.assign(b.data(), b.data() + b.size());
  f.q.resize(f.n * f.n);
  for (std::size_t r = 0; r < f.n; ++r)
    for (std::size_t c = 0; c < f.n; ++c)
      f.q[r * f.n + c] = 0.5 * (q(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) +
                                q(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r)));
  return f;
}

McEstimate mc_expectation(const std::vector<ScoreForm>& forms, const McOptions& opts) {
  if (opts.samples == 0) throw std::invalid_argument("Monte-Carlo: samples must be at least 1");
  if (forms.empty() || forms.size() > 3) throw std::invalid_argument("Monte-Carlo: between 1 and 3 forms");
  if (opts.shard_size == 0) throw std::invalid_argument("Monte-Carlo: shard_size must be at least 1");
  const std::size_t n = forms.front().n;
  for (const auto& f : forms)
    if (f.n != n) throw std::invalid_argument("Monte-Carlo: forms of different dimension");
  const ProductMomentsFn kernel = opts.kernel ? opts.kernel : select_product_moments();

  const std::size_t shards = (opts.samples + opts.shard_size - 1) / opts.shard_size;
  std::vector<MomentSums> partial(shards);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    std::vector<std::vector<double>> z(n, std::vector<double>(opts.shard_size));
    std::vector<const double*> cols(n);
    for (std::size_t shard; (shard = next.fetch_add(1)) < shards;) {
      const std::size_t begin = shard * opts.shard_size;
      const std::size_t count = std::min(opts.shard_size, opts.samples - begin);
      std::mt19937_64 rng(shard_seed(opts.seed, shard));
      std::normal_distribution<double> normal;
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t k = 0; k < n; ++k) z[k][i] = normal(rng);
      for (std::size_t k = 0; k < n; ++k) cols[k] = z[k].data();
      partial[shard] = kernel(forms.data(), forms.size(), cols.data(), count);
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, shards));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // shard order, independent of which thread ran which shard
  double sum = 0, sum_sq = 0;
  for (const auto& m : partial) {
    sum += m.sum;
    sum_sq += m.sum_sq;
  }
  const double count = static_cast<double>(opts.samples);
  const double mean = sum / count;
  const double var = std::max(0.0, sum_sq / count - mean * mean);
  return {mean, std::sqrt(var / count), opts.samples};
}

McEstimate mc_oracle_metric(const ManifoldPoint& p, const TangentVector& s, const TangentVector& t,
                            const McOptions& opts) {
  return mc_expectation({whitened_score(p, s), whitened_score(p, t)}, opts);
}

McEstimate mc_oracle_cubic(const ManifoldPoint& p, const TangentVector& s, const TangentVector& t,
                           const TangentVector& w, const McOptions& opts) {
  return mc_expectation({whitened_score(p, s), whitened_score(p, t), whitened_score(p, w)}, opts);
}

}  // namespace normgeo
