// Compiled with -mavx2 -mfma; only reached when the CPU reports both.
#include <immintrin.h>

#include "dpar/simd/kernels.hpp"

namespace dpar::simd::avx2 {

void convolve_accumulate(std::span<const double> a, std::span<const double> b,
                         std::span<double> out) noexcept {
  const std::size_t nb = b.size();
  const std::size_t nb4 = nb & ~std::size_t{3};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const __m256d va = _mm256_set1_pd(ai);
    double* dst = out.data() + i;
    std::size_t j = 0;
    for (; j < nb4; j += 4) {
      const __m256d vb = _mm256_loadu_pd(b.data() + j);
      const __m256d vo = _mm256_loadu_pd(dst + j);
      _mm256_storeu_pd(dst + j, _mm256_fmadd_pd(va, vb, vo));
    }
    for (; j < nb; ++j) {
      dst[j] += ai * b[j];
    }
  }
}

}  // namespace dpar::simd::avx2
