#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace normgeo {

/// Score of one tangent direction in whitened coordinates z (x = mu + A z):
/// c + b^T z + 1/2 z^T Q z, Q symmetric n x n stored row-major.
struct ScoreForm {
  std::size_t n = 0;
  double c = 0;
  std::vector<double> b;
  std::vector<double> q;
};

struct MomentSums {
  double sum = 0;
  double sum_sq = 0;
};

/// Sums of prod_k score_k(z_i) and its square over count samples. z holds n
/// coordinate arrays (structure of arrays), each of length count. Between
/// one and three forms.
using ProductMomentsFn = MomentSums (*)(const ScoreForm* forms, std::size_t nforms, const double* const* z,
                                        std::size_t count);

MomentSums product_moments_scalar(const ScoreForm* forms, std::size_t nforms, const double* const* z,
                                  std::size_t count);
#if defined(NORMGEO_HAVE_AVX2_KERNEL)
MomentSums product_moments_avx2(const ScoreForm* forms, std::size_t nforms, const double* const* z,
                                std::size_t count);
#endif

/// Best kernel for this CPU. NORMGEO_SIMD=scalar forces the scalar path.
ProductMomentsFn select_product_moments();
/// "scalar" or "avx2", matching select_product_moments().
std::string_view product_moments_variant();
/// True when the AVX2 variant is compiled in and the CPU supports it.
bool avx2_available();

}  // namespace normgeo
