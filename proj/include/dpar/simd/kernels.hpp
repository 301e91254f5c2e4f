#pragma once

// Data-parallel kernels behind the rank estimator.
//
// Every kernel has a portable scalar reference in dpar::simd::scalar. Vector
// variants live in their own namespaces, are compiled only for targets that
// have the instructions, and are picked at runtime by active_backend().
// Setting DPAR_SIMD=scalar in the environment forces the reference path.

#include <span>
#include <string_view>

namespace dpar::simd {

enum class Backend { scalar, avx2, neon };

std::string_view to_string(Backend b) noexcept;

/// True when the running CPU can execute the backend and it was compiled in.
bool backend_available(Backend b) noexcept;

/// Best available backend, honoring DPAR_SIMD. Resolved once per process.
Backend active_backend() noexcept;

namespace scalar {
// out[i + j] += a[i] * b[j]; out must hold a.size() + b.size() - 1 values.
void convolve_accumulate(std::span<const double> a, std::span<const double> b,
                         std::span<double> out) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void convolve_accumulate(std::span<const double> a, std::span<const double> b,
                         std::span<double> out) noexcept;
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void convolve_accumulate(std::span<const double> a, std::span<const double> b,
                         std::span<double> out) noexcept;
}  // namespace neon
#endif

/// Dispatching entry point. Throws ContractError when out is too small.
void convolve_accumulate(std::span<const double> a, std::span<const double> b,
                         std::span<double> out, Backend backend = active_backend());

}  // namespace dpar::simd
