#include <cstdlib>
#include <string>
#include <string_view>

#include "dpar/error.hpp"
#include "dpar/simd/kernels.hpp"

namespace dpar::simd {

std::string_view to_string(Backend b) noexcept {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

namespace {

Backend detect() noexcept {
  if (const char* forced = std::getenv("DPAR_SIMD")) {
    const std::string_view name(forced);
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
      if (name == to_string(b) && backend_available(b)) return b;
    }
  }
  if (backend_available(Backend::avx2)) return Backend::avx2;
  if (backend_available(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

}  // namespace

Backend active_backend() noexcept {
  static const Backend backend = detect();
  return backend;
}

void convolve_accumulate(std::span<const double> a, std::span<const double> b,
                         std::span<double> out, Backend backend) {
  if (a.empty() || b.empty()) return;
  if (out.size() < a.size() + b.size() - 1) {
    throw ContractError("convolution output holds " + std::to_string(out.size()) +
                        " values, needs " + std::to_string(a.size() + b.size() - 1));
  }
  if (!backend_available(backend)) backend = Backend::scalar;
  switch (backend) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
      avx2::convolve_accumulate(a, b, out);
      return;
#endif
#if defined(__aarch64__)
    case Backend::neon:
      neon::convolve_accumulate(a, b, out);
      return;
#endif
    default:
      scalar::convolve_accumulate(a, b, out);
  }
}

}  // namespace dpar::simd
