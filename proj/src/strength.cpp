#include "dpar/strength.hpp"

#include <algorithm>
#include <cmath>

#include "dpar/error.hpp"

namespace dpar {

std::string_view to_string(Category c) noexcept {
  switch (c) {
    case Category::weak: return "weak";
    case Category::fair: return "fair";
    case Category::strong: return "strong";
  }
  return "unknown";
}

Category categorize(double bits, const Thresholds& thresholds) noexcept {
  if (bits <= thresholds.weak_max) return Category::weak;
  if (bits <= thresholds.fair_max) return Category::fair;
  return Category::strong;
}

CrackTime crack_time(double bits, double crack_rate) {
  if (!(crack_rate > 0.0)) throw ContractError("crack rate must be positive");
  CrackTime t;
  t.seconds = std::exp2(bits) / crack_rate;

  struct Unit {
    double seconds;
    const char* singular;
    const char* plural;
  };
  static constexpr Unit kUnits[] = {
      {365.25 * 86400.0, "year", "years"},
      {86400.0, "day", "days"},
      {3600.0, "hour", "hours"},
      {60.0, "minute", "minutes"},
      {1.0, "second", "seconds"},
  };

  if (t.seconds < 1.0) {
    t.human = "less than a second";
    return t;
  }
  if (t.seconds / kUnits[0].seconds > 1e6) {
    t.human = "more than a million years";
    return t;
  }
  for (const auto& unit : kUnits) {
    if (t.seconds >= unit.seconds) {
      // Relative slack so exact unit multiples are not bumped by rounding noise.
      const auto n = static_cast<long long>(std::ceil(t.seconds / unit.seconds * (1.0 - 1e-12)));
      t.human = std::to_string(n) + " " + (n == 1 ? unit.singular : unit.plural);
      break;
    }
  }
  return t;
}

double DimensionScores::total() const noexcept {
  double sum = 0.0;
  for (double v : log2p) sum += v;
  return sum;
}

DimensionScores score_parts(const Model& model, const PasswordParts& parts,
                            const L33tTable& table) {
  const auto keys = dimension_keys(parts, table);
  DimensionScores s;
  for (Dimension d : kAllDimensions) s.log2p[index(d)] = model.dim_log2p(d, keys[index(d)]);
  return s;
}

// ---------------------------------------------------------------------------

RankEstimator::RankEstimator(const Model& model, simd::Backend backend)
    : bin_width_(model.bin_width()) {
  mass_ = {1.0};
  total_ = 1.0;
  for (Dimension d : kAllDimensions) {
    const auto& h = model.histogram(d);
    std::vector<double> bins(h.counts.begin(), h.counts.end());
    std::vector<double> next(mass_.size() + bins.size() - 1, 0.0);
    simd::convolve_accumulate(mass_, bins, next, backend);
    mass_ = std::move(next);

    double keys = 0.0;
    for (double c : bins) keys += c;
    total_ *= keys;
  }
  cumulative_.resize(mass_.size());
  double running = 0.0;
  for (std::size_t k = 0; k < mass_.size(); ++k) {
    running += mass_[k];
    cumulative_[k] = running;
  }
}

double RankEstimator::rank(double log2p) const noexcept {
  const std::size_t bin = LogProbHistogram::bin_of(log2p, bin_width_);
  const double r = bin >= cumulative_.size() ? cumulative_.back() : cumulative_[bin];
  return std::max(r, 1.0);
}

double RankEstimator::rank_bits(double log2p) const noexcept { return std::log2(rank(log2p)); }

// ---------------------------------------------------------------------------

namespace {

std::vector<double> support_log2p(const DimensionTable& table) {
  std::vector<double> out;
  out.reserve(table.size() + 1);
  for (const auto& [key, count] : table.counts()) out.push_back(table.log2p(key));
  out.push_back(table.floor_log2p());
  return out;
}

}  // namespace

double exact_rank(const Model& model, double log2p) {
  std::array<std::vector<double>, 5> dims;
  std::uint64_t combinations = 1;
  for (Dimension d : kAllDimensions) {
    dims[index(d)] = support_log2p(model.table(d));
    combinations *= dims[index(d)].size();
    if (combinations > kMaxExactCombinations) {
      throw ContractError("exact rank refused: more than " +
                          std::to_string(kMaxExactCombinations) + " combinations");
    }
  }

  // Sums are formed in Dimension order, matching DimensionScores::total(), so
  // a query taken from one of the combinations compares equal to itself.
  constexpr double kTieSlack = 1e-9;
  const double threshold = log2p - kTieSlack;
  std::uint64_t count = 0;
  for (double p : dims[0]) {
    for (double s : dims[1]) {
      const double ps = p + s;
      for (double b : dims[2]) {
        const double psb = ps + b;
        for (double l : dims[3]) {
          const double psbl = psb + l;
          for (double c : dims[4]) {
            if (psbl + c >= threshold) ++count;
          }
        }
      }
    }
  }
  return static_cast<double>(std::max<std::uint64_t>(count, 1));
}

double exact_rank_bits(const Model& model, double log2p) {
  return std::log2(exact_rank(model, log2p));
}

// ---------------------------------------------------------------------------

StrengthReport make_report(double log2p, double bits, const StrengthConfig& config) {
  StrengthReport r;
  r.log2p = log2p;
  r.bits = bits;
  r.category = categorize(bits, config.thresholds);
  auto t = crack_time(bits, config.crack_rate);
  r.crack_seconds = t.seconds;
  r.crack_human = std::move(t.human);
  return r;
}

Scorer::Scorer(std::shared_ptr<const Model> model, L33tTable table)
    : model_(std::move(model)), table_(std::move(table)), estimator_(*model_) {}

PasswordParts Scorer::parse(std::string_view password) const {
  return decompose(password, table_, model_.get());
}

DimensionScores Scorer::scores(const PasswordParts& parts) const {
  return score_parts(*model_, parts, table_);
}

StrengthReport Scorer::report(const PasswordParts& parts, const StrengthConfig& config) const {
  const double log2p = scores(parts).total();
  return make_report(log2p, bits(log2p), config);
}

}  // namespace dpar
