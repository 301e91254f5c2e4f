#include <arm_neon.h>

#include "dpar/simd/kernels.hpp"

namespace dpar::simd::neon {

void convolve_accumulate(std::span<const double> a, std::span<const double> b,
                         std::span<double> out) noexcept {
  const std::size_t nb = b.size();
  const std::size_t nb2 = nb & ~std::size_t{1};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const float64x2_t va = vdupq_n_f64(ai);
    double* dst = out.data() + i;
    std::size_t j = 0;
    for (; j < nb2; j += 2) {
      vst1q_f64(dst + j, vfmaq_f64(vld1q_f64(dst + j), va, vld1q_f64(b.data() + j)));
    }
    for (; j < nb; ++j) {
      dst[j] += ai * b[j];
    }
  }
}

}  // namespace dpar::simd::neon
