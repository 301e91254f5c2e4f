#pragma once

// Test-only helpers and independent oracles. Nothing here calls into the
// code paths it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dpar/model.hpp"

namespace dpar::testing {

inline constexpr std::string_view kPrintable =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
    "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

/// Random string over letters, digits and symbols with >= 1 letter and
/// >= 1 digit, length in [8, max_len].
inline std::string random_policy_valid(std::mt19937_64& gen, std::size_t max_len = 20) {
  std::uniform_int_distribution<std::size_t> len_dist(8, max_len);
  std::uniform_int_distribution<std::size_t> ch(0, kPrintable.size() - 1);
  for (;;) {
    std::string s(len_dist(gen), ' ');
    for (auto& c : s) c = kPrintable[ch(gen)];
    const bool letter = std::any_of(s.begin(), s.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    });
    const bool digit = std::any_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (letter && digit) return s;
  }
}

/// Full-matrix Wagner-Fischer; the reference for every distance test.
inline std::size_t reference_levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = d[i - 1][j - 1] + (a[i - 1] != b[j - 1]);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[a.size()][b.size()];
}

/// Model built directly from per-dimension count lists; keys are synthetic.
inline Model model_from_counts(const std::array<std::vector<std::uint64_t>, 5>& counts,
                               double bin_width = kDefaultBinWidth) {
  std::array<DimensionTable, 5> tables;
  for (std::size_t d = 0; d < 5; ++d) {
    DimensionTable::Counts c;
    for (std::size_t k = 0; k < counts[d].size(); ++k) {
      c.emplace("k" + std::to_string(d) + "_" + std::to_string(k), counts[d][k]);
    }
    tables[d] = DimensionTable(std::move(c));
  }
  return Model(std::move(tables), ModelMeta{1, "0000000000000000"}, bin_width);
}

/// Every combination's log2 probability over observed keys plus one floor
/// pseudo-key per dimension, summed in dimension order.
inline std::vector<double> enumerate_support(const Model& model) {
  std::vector<double> sums{0.0};
  for (Dimension d : kAllDimensions) {
    const auto& t = model.table(d);
    std::vector<double> values;
    for (const auto& [key, count] : t.counts()) {
      values.push_back(std::log2(static_cast<double>(count) / static_cast<double>(t.total())));
    }
    values.push_back(std::log2(1.0 / (2.0 * static_cast<double>(t.total()))));
    std::vector<double> next;
    next.reserve(sums.size() * values.size());
    for (double s : sums) {
      for (double v : values) next.push_back(s + v);
    }
    sums = std::move(next);
  }
  return sums;
}

class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 gen{std::random_device{}()};
    path_ = std::filesystem::temp_directory_path() / ("dpar-test-" + std::to_string(gen()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(std::string_view name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, std::string_view content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<std::string> read_lines(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

/// Rank-ordered list with Zipf counts: count(r) = round(top / r^exponent),
/// at least 1. Written as password<TAB>count lines.
inline std::string zipf_corpus(const std::vector<std::string>& ranked, double top = 290729.0,
                               double exponent = 0.85) {
  std::string out;
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    const double c = std::max(1.0, std::round(top / std::pow(static_cast<double>(r + 1), exponent)));
    out += ranked[r];
    out += '\t';
    out += std::to_string(static_cast<std::uint64_t>(c));
    out += '\n';
  }
  return out;
}

}  // namespace dpar::testing
