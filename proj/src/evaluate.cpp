#include "dpar/evaluate.hpp"

#include <algorithm>

#include "dpar/error.hpp"
#include "dpar/rng.hpp"

namespace dpar {

EvalReport evaluate(const Scorer& scorer, std::span<const std::string> sample, std::uint64_t seed,
                    std::size_t n, const RecommenderConfig& config) {
  std::vector<std::size_t> valid;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (validate_policy(sample[i], config.policy).valid) valid.push_back(i);
  }
  if (valid.size() < kMinEvalSample) {
    throw Error("sample has " + std::to_string(valid.size()) + " policy-valid passwords, need " +
                std::to_string(kMinEvalSample));
  }

  Rng rng(seed);
  if (n < valid.size()) {
    // Partial Fisher-Yates over the candidate indices.
    for (std::size_t i = 0; i < n; ++i) {
      std::swap(valid[i], valid[i + rng.uniform(valid.size() - i)]);
    }
    valid.resize(n);
    std::sort(valid.begin(), valid.end());
  }

  EvalReport report;
  report.valid_lines = valid.size();
  report.rows.reserve(valid.size());
  double total = 0.0;
  report.min_improvement = 0.0;
  for (std::size_t idx : valid) {
    RecommenderConfig rc = config;
    rc.seed = rng.next();
    const auto result = recommend(scorer, sample[idx], rc);

    EvalRow row;
    row.password = sample[idx];
    row.original_bits = result.report.bits;
    row.best_bits = result.report.bits;
    row.buttons = result.buttons.size();
    const auto best = std::max_element(
        result.buttons.begin(), result.buttons.end(),
        [](const Recommendation& a, const Recommendation& b) { return a.bits < b.bits; });
    if (best != result.buttons.end()) {
      row.best_bits = best->bits;
      row.distance = best->distance;
    }
    const double gain = row.best_bits - row.original_bits;
    total += gain;
    report.min_improvement = report.rows.empty() ? gain : std::min(report.min_improvement, gain);
    report.rows.push_back(std::move(row));
  }
  report.mean_improvement = total / static_cast<double>(report.rows.size());
  return report;
}

}  // namespace dpar
