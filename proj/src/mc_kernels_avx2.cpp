#include "normgeo/mc_kernels.hpp"

#if defined(NORMGEO_HAVE_AVX2_KERNEL)

#include <immintrin.h>

#include <stdexcept>

namespace normgeo {

namespace {

__m256d evaluate4(const ScoreForm& f, const double* const* z, std::size_t i) {
  __m256d s = _mm256_set1_pd(f.c);
  for (std::size_t r = 0; r < f.n; ++r) {
    const __m256d zr = _mm256_loadu_pd(z[r] + i);
    __m256d inner = _mm256_mul_pd(_mm256_set1_pd(0.5 * f.q[r * f.n + r]), zr);
    for (std::size_t c = r + 1; c < f.n; ++c)
      inner = _mm256_fmadd_pd(_mm256_set1_pd(f.q[r * f.n + c]), _mm256_loadu_pd(z[c] + i), inner);
    s = _mm256_fmadd_pd(zr, _mm256_add_pd(_mm256_set1_pd(f.b[r]), inner), s);
  }
  return s;
}

double scalar_eval(const ScoreForm& f, const double* const* z, std::size_t i) {
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

MomentSums product_moments_avx2(const ScoreForm* forms, std::size_t nforms, const double* const* z,
                                std::size_t count) {
  if (nforms == 0 || nforms > 3) throw std::invalid_argument("product_moments: between 1 and 3 forms");
  __m256d sum = _mm256_setzero_pd(), sq = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256d p = evaluate4(forms[0], z, i);
    for (std::size_t k = 1; k < nforms; ++k) p = _mm256_mul_pd(p, evaluate4(forms[k], z, i));
    sum = _mm256_add_pd(sum, p);
    sq = _mm256_fmadd_pd(p, p, sq);
  }
  alignas(32) double ls[4], lq[4];
  _mm256_store_pd(ls, sum);
  _mm256_store_pd(lq, sq);
  for (; i < count; ++i) {
    double p = scalar_eval(forms[0], z, i);
    for (std::size_t k = 1; k < nforms; ++k) p *= scalar_eval(forms[k], z, i);
    ls[i % 4] += p;
    lq[i % 4] += p * p;
  }
  return {(ls[0] + ls[1]) + (ls[2] + ls[3]), (lq[0] + lq[1]) + (lq[2] + lq[3])};
}

}  // namespace normgeo

#endif
