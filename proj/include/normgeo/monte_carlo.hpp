#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "normgeo/gaussian.hpp"
#include "normgeo/mc_kernels.hpp"

namespace normgeo {

struct McOptions {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  /// 0 = hardware concurrency. The result does not depend on this.
  unsigned threads = 0;
  std::size_t shard_size = 65536;
  /// nullptr = select_product_moments().
  ProductMomentsFn kernel = nullptr;
};

struct McEstimate {
  double value = 0;
  double standard_error = 0;
  std::size_t samples = 0;
};

/// Per-shard generator seed: splitmix64 applied to seed and shard index.
std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard);

/// Score of t in whitened coordinates at p.
ScoreForm whitened_score(const ManifoldPoint& p, const TangentVector& t);

/// Mean of the product of the given score forms (1 to 3) under z ~ N(0, I).
/// Throws std::invalid_argument when samples == 0.
McEstimate mc_expectation(const std::vector<ScoreForm>& forms, const McOptions& opts);

/// E[(d_s log p)(d_t log p)] under x ~ N(mu, Sigma).
McEstimate mc_oracle_metric(const ManifoldPoint& p, const TangentVector& s, const TangentVector& t,
                            const McOptions& opts);
/// E[(d_s log p)(d_t log p)(d_w log p)].
McEstimate mc_oracle_cubic(const ManifoldPoint& p, const TangentVector& s, const TangentVector& t,
                           const TangentVector& w, const McOptions& opts);

}  // namespace normgeo
