#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dpar/recommend.hpp"
#include "dpar/strength.hpp"

namespace dpar {

struct EvalRow {
  std::string password;
  double original_bits = 0.0;
  double best_bits = 0.0;      // strongest button, or the original when none
  std::size_t distance = 0;    // edit distance of that button, 0 when none
  std::size_t buttons = 0;
};

struct EvalReport {
  std::vector<EvalRow> rows;
  double mean_improvement = 0.0;
  double min_improvement = 0.0;
  std::size_t valid_lines = 0;  // policy-valid lines in the sample file
};

inline constexpr std::size_t kMinEvalSample = 10;

/// Runs recommend() over up to `n` policy-valid passwords from `sample`.
/// When more are available, `n` are drawn without replacement (kept in file
/// order); per-password seeds come from the same seeded stream. Throws
/// Error when fewer than kMinEvalSample lines are policy-valid.
EvalReport evaluate(const Scorer& scorer, std::span<const std::string> sample, std::uint64_t seed,
                    std::size_t n, const RecommenderConfig& config = {});

}  // namespace dpar
