#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpar/decomposition.hpp"
#include "dpar/l33t.hpp"
#include "dpar/model.hpp"
#include "dpar/simd/kernels.hpp"

namespace dpar {

inline constexpr double kDefaultCrackRate = 3.6e6;  // guesses per second

enum class Category { weak, fair, strong };

std::string_view to_string(Category c) noexcept;

/// Upper bounds (inclusive) of the weak and fair bands, in bits.
struct Thresholds {
  double weak_max = 29.0;
  double fair_max = 37.0;
};

Category categorize(double bits, const Thresholds& thresholds = {}) noexcept;

struct CrackTime {
  double seconds = 0.0;
  std::string human;  // "less than a second", "3 minutes", "4 days", ...
};

/// 2^bits / crack_rate seconds, rendered in the largest whole unit and
/// rounded up. Throws ContractError unless crack_rate > 0.
CrackTime crack_time(double bits, double crack_rate = kDefaultCrackRate);

/// Per-dimension log2 probabilities, indexed by Dimension.
struct DimensionScores {
  std::array<double, 5> log2p{};

  double operator[](Dimension d) const noexcept { return log2p[index(d)]; }
  /// Log-domain product, summed in Dimension order.
  double total() const noexcept;
};

DimensionScores score_parts(const Model& model, const PasswordParts& parts,
                            const L33tTable& table);

inline double password_log2p(const Model& model, const PasswordParts& parts,
                             const L33tTable& table) {
  return score_parts(model, parts, table).total();
}

/// Approximate rank of a log-probability among all key combinations of a
/// model, from the convolution of the per-dimension histograms.
///
/// The support is every observed key plus one floor pseudo-key per
/// dimension. Each dimension's keys are placed in the nearest bin, so a
/// combination's bin index is off from its true -log2p/b by at most 2.5.
class RankEstimator {
 public:
  explicit RankEstimator(const Model& model,
                         simd::Backend backend = simd::active_backend());

  /// Number of combinations whose bin is at or above the query's bin
  /// (more probable or equal). Never below 1.
  double rank(double log2p) const noexcept;
  double rank_bits(double log2p) const noexcept;

  double total_combinations() const noexcept { return total_; }
  double bin_width() const noexcept { return bin_width_; }
  std::span<const double> mass() const noexcept { return mass_; }

 private:
  double bin_width_;
  double total_ = 0.0;
  std::vector<double> mass_;
  std::vector<double> cumulative_;
};

inline constexpr std::uint64_t kMaxExactCombinations = 10'000'000;

/// Exact rank by enumerating every combination over the same support as
/// RankEstimator. Throws ContractError past kMaxExactCombinations.
double exact_rank(const Model& model, double log2p);
double exact_rank_bits(const Model& model, double log2p);

struct StrengthReport {
  double log2p = 0.0;
  double bits = 0.0;
  Category category = Category::weak;
  double crack_seconds = 0.0;
  std::string crack_human;
};

struct StrengthConfig {
  double crack_rate = kDefaultCrackRate;
  Thresholds thresholds;
};

StrengthReport make_report(double log2p, double bits, const StrengthConfig& config);

/// Binds a loaded model, its l33t table and the rank estimator built from it.
class Scorer {
 public:
  Scorer(std::shared_ptr<const Model> model, L33tTable table);

  const Model& model() const noexcept { return *model_; }
  const L33tTable& table() const noexcept { return table_; }
  const RankEstimator& estimator() const noexcept { return estimator_; }

  /// decompose() with model-driven l33t disambiguation.
  PasswordParts parse(std::string_view password) const;
  DimensionScores scores(const PasswordParts& parts) const;
  double bits(double log2p) const noexcept { return estimator_.rank_bits(log2p); }
  StrengthReport report(const PasswordParts& parts, const StrengthConfig& config = {}) const;

 private:
  std::shared_ptr<const Model> model_;
  L33tTable table_;
  RankEstimator estimator_;
};

}  // namespace dpar
