#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpar/decomposition.hpp"
#include "dpar/l33t.hpp"

namespace dpar {

enum class Dimension : std::uint8_t { prefix, suffix, base, l33t, cap };

inline constexpr std::array<Dimension, 5> kAllDimensions = {
    Dimension::prefix, Dimension::suffix, Dimension::base, Dimension::l33t, Dimension::cap};

inline constexpr std::size_t index(Dimension d) noexcept { return static_cast<std::size_t>(d); }

std::string_view to_string(Dimension d) noexcept;
std::optional<Dimension> parse_dimension(std::string_view name) noexcept;

/// Key -> occurrence count for one dimension. Keys iterate in byte order.
class DimensionTable {
 public:
  using Counts = std::map<std::string, std::uint64_t, std::less<>>;

  DimensionTable() = default;
  explicit DimensionTable(Counts counts);

  void add(std::string_view key, std::uint64_t count = 1);
  /// Drops keys whose count is below `min_count`.
  void prune_below(std::uint64_t min_count);

  std::uint64_t count(std::string_view key) const;
  std::uint64_t total() const noexcept { return total_; }
  std::size_t size() const noexcept { return counts_.size(); }
  const Counts& counts() const noexcept { return counts_; }

  /// log2(count/total), or floor_log2p() for unseen keys.
  double log2p(std::string_view key) const;
  /// log2(1 / (2 * total)): the probability assigned to any unseen key.
  double floor_log2p() const;

  friend bool operator==(const DimensionTable&, const DimensionTable&) = default;

 private:
  Counts counts_;
  std::uint64_t total_ = 0;
};

/// Number of keys per fixed-width bin of -log2 probability. The smoothing
/// floor contributes one pseudo-key.
struct LogProbHistogram {
  double bin_width = 0.05;
  std::vector<std::uint64_t> counts;

  static std::size_t bin_of(double log2p, double bin_width);
  static LogProbHistogram build(const DimensionTable& table, double bin_width);

  friend bool operator==(const LogProbHistogram&, const LogProbHistogram&) = default;
};

struct ModelMeta {
  std::uint64_t corpus_lines = 0;
  std::string l33t_hash;

  friend bool operator==(const ModelMeta&, const ModelMeta&) = default;
};

inline constexpr double kDefaultBinWidth = 0.05;
inline constexpr int kModelFormatVersion = 1;

/// Five per-dimension frequency tables plus their log-probability histograms.
/// Immutable once built; safe to share between threads.
class Model {
 public:
  Model(std::array<DimensionTable, 5> tables, ModelMeta meta,
        double bin_width = kDefaultBinWidth);

  const DimensionTable& table(Dimension d) const noexcept { return tables_[index(d)]; }
  const LogProbHistogram& histogram(Dimension d) const noexcept {
    return histograms_[index(d)];
  }
  const ModelMeta& meta() const noexcept { return meta_; }
  double bin_width() const noexcept { return bin_width_; }

  double dim_log2p(Dimension d, std::string_view key) const { return table(d).log2p(key); }

  friend bool operator==(const Model& a, const Model& b) {
    return a.tables_ == b.tables_ && a.meta_ == b.meta_;
  }

 private:
  std::array<DimensionTable, 5> tables_;
  std::array<LogProbHistogram, 5> histograms_;
  ModelMeta meta_;
  double bin_width_;
};

struct TrainOptions {
  std::uint64_t min_count = 1;
  double bin_width = kDefaultBinWidth;
};

struct TrainStats {
  std::uint64_t lines = 0;      // lines read, including skipped ones
  std::uint64_t accepted = 0;   // lines that contributed counts
  std::uint64_t skipped = 0;
  std::uint64_t passwords = 0;  // sum of per-line counts
};

struct TrainResult {
  Model model;
  TrainStats stats;
};

/// Counts dimension keys over a corpus of `password` or `password<TAB>count`
/// lines. Lines that are empty, carry a malformed count, or use characters
/// outside the supported alphabet are skipped. Throws Error when no line is
/// usable.
TrainResult train(std::istream& corpus, const L33tTable& table, const TrainOptions& options = {});

/// The five keys a password contributes to the model.
std::array<std::string, 5> dimension_keys(const PasswordParts& parts, const L33tTable& table);

void save_model(const Model& model, std::ostream& out);
void save_model(const Model& model, const std::filesystem::path& path);
/// Throws FormatError on any malformed, truncated or mis-versioned input.
Model load_model(std::istream& in, double bin_width = kDefaultBinWidth);
Model load_model(const std::filesystem::path& path, double bin_width = kDefaultBinWidth);

std::string escape_key(std::string_view key);
std::string unescape_key(std::string_view escaped);

}  // namespace dpar
