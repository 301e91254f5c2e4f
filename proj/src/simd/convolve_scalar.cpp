#include "dpar/simd/kernels.hpp"

namespace dpar::simd::scalar {

void convolve_accumulate(std::span<const double> a, std::span<const double> b,
                         std::span<double> out) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    double* dst = out.data() + i;
    for (std::size_t j = 0; j < b.size(); ++j) {
      dst[j] += ai * b[j];
    }
  }
}

}  // namespace dpar::simd::scalar
