#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace dpar {

/// Seeded generator used everywhere randomness affects output.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use rejection sampling on the raw 64-bit output
/// rather than std::uniform_int_distribution, whose algorithm differs between
/// standard libraries.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t uniform(std::size_t n);

  /// Seed drawn from std::random_device.
  static std::uint64_t entropy_seed();

 private:
  std::mt19937_64 engine_;
};

}  // namespace dpar
