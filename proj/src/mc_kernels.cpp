#include "normgeo/mc_kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace normgeo {

namespace {

double evaluate(const ScoreForm& f, const double* const* z, std::size_t i) {
  double s = f.c;
  for (std::size_t r = 0; r < f.n; ++r) {
    const double zr = z[r][i];
    double inner = 0.5 * f.q[r * f.n + r] * zr;
    for (std::size_t c = r + 1; c < f.n; ++c) inner += f.q[r * f.n + c] * z[c][i];
    s += zr * (f.b[r] + inner);
  }
  return s;
}

}  // namespace

MomentSums product_moments_scalar(const ScoreForm* forms, std::size_t nforms, const double* const* z,
                                  std::size_t count) {
  if (nforms == 0 || nforms > 3) throw std::invalid_argument("product_moments: between 1 and 3 forms");
  // four interleaved partial sums, matching the lane layout of the vector kernel
  double sum[4] = {0, 0, 0, 0}, sq[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < count; ++i) {
    double p = evaluate(forms[0], z, i);
    for (std::size_t k = 1; k < nforms; ++k) p *= evaluate(forms[k], z, i);
    sum[i % 4] += p;
    sq[i % 4] += p * p;
  }
  return {(sum[0] + sum[1]) + (sum[2] + sum[3]), (sq[0] + sq[1]) + (sq[2] + sq[3])};
}

bool avx2_available() {
#if defined(NORMGEO_HAVE_AVX2_KERNEL)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

bool scalar_forced() {
  const char* env = std::getenv("NORMGEO_SIMD");
  return env && std::strcmp(env, "scalar") == 0;
}

}  // namespace

ProductMomentsFn select_product_moments() {
#if defined(NORMGEO_HAVE_AVX2_KERNEL)
  if (!scalar_forced() && avx2_available()) return product_moments_avx2;
#endif
  return product_moments_scalar;
}

std::string_view product_moments_variant() {
  return select_product_moments() == product_moments_scalar ? "scalar" : "avx2";
}

}  // namespace normgeo
