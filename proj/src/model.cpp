#include "dpar/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dpar/charset.hpp"
#include "dpar/error.hpp"

namespace dpar {

std::string_view to_string(Dimension d) noexcept {
  switch (d) {
    case Dimension::prefix: return "prefix";
    case Dimension::suffix: return "suffix";
    case Dimension::base: return "base";
    case Dimension::l33t: return "l33t";
    case Dimension::cap: return "cap";
  }
  return "unknown";
}

std::optional<Dimension> parse_dimension(std::string_view name) noexcept {
  for (Dimension d : kAllDimensions) {
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// DimensionTable

DimensionTable::DimensionTable(Counts counts) : counts_(std::move(counts)) {
  for (const auto& [key, count] : counts_) {
    if (count == 0) throw InvariantError("dimension table holds a zero count");
    total_ += count;
  }
}

void DimensionTable::add(std::string_view key, std::uint64_t count) {
  if (count == 0) return;
  auto it = counts_.find(key);
  if (it == counts_.end()) {
    counts_.emplace(std::string(key), count);
  } else {
    it->second += count;
  }
  total_ += count;
}

void DimensionTable::prune_below(std::uint64_t min_count) {
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->second < min_count) {
      total_ -= it->second;
      it = counts_.erase(it);
    } else {
      ++it;
    }
  }
}

std::uint64_t DimensionTable::count(std::string_view key) const {
  auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

double DimensionTable::floor_log2p() const {
  return -std::log2(2.0 * static_cast<double>(std::max<std::uint64_t>(total_, 1)));
}

double DimensionTable::log2p(std::string_view key) const {
  const std::uint64_t c = count(key);
  if (c == 0) return floor_log2p();
  return std::log2(static_cast<double>(c)) - std::log2(static_cast<double>(total_));
}

// ---------------------------------------------------------------------------
// Histograms

std::size_t LogProbHistogram::bin_of(double log2p, double bin_width) {
  const double bins = std::nearbyint(-log2p / bin_width);
  return bins <= 0.0 ? 0 : static_cast<std::size_t>(bins);
}

LogProbHistogram LogProbHistogram::build(const DimensionTable& table, double bin_width) {
  LogProbHistogram h;
  h.bin_width = bin_width;
  const auto bump = [&h](std::size_t bin) {
    if (bin >= h.counts.size()) h.counts.resize(bin + 1, 0);
    ++h.counts[bin];
  };
  for (const auto& [key, count] : table.counts()) {
    bump(bin_of(table.log2p(key), bin_width));
  }
  bump(bin_of(table.floor_log2p(), bin_width));
  return h;
}

// ---------------------------------------------------------------------------
// Model

Model::Model(std::array<DimensionTable, 5> tables, ModelMeta meta, double bin_width)
    : tables_(std::move(tables)), meta_(std::move(meta)), bin_width_(bin_width) {
  if (!(bin_width_ > 0.0)) throw ContractError("histogram bin width must be positive");
  for (Dimension d : kAllDimensions) {
    histograms_[index(d)] = LogProbHistogram::build(tables_[index(d)], bin_width_);
  }
}

std::array<std::string, 5> dimension_keys(const PasswordParts& parts, const L33tTable& table) {
  std::array<std::string, 5> keys;
  keys[index(Dimension::prefix)] = parts.prefix;
  keys[index(Dimension::suffix)] = parts.suffix;
  keys[index(Dimension::base)] = parts.base_word;
  keys[index(Dimension::l33t)] = l33t_key(parts, table);
  keys[index(Dimension::cap)] = cap_key(parts);
  return keys;
}

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Splits an optional trailing "<TAB>count" off a corpus line.
std::optional<std::pair<std::string_view, std::uint64_t>> parse_corpus_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::uint64_t count = 1;
  if (auto tab = line.rfind('\t'); tab != std::string_view::npos) {
    auto parsed = parse_u64(line.substr(tab + 1));
    if (!parsed || *parsed == 0) return std::nullopt;
    count = *parsed;
    line = line.substr(0, tab);
  }
  if (line.empty() || !std::all_of(line.begin(), line.end(), is_supported)) {
    return std::nullopt;
  }
  return std::pair{line, count};
}

}  // namespace

TrainResult train(std::istream& corpus, const L33tTable& table, const TrainOptions& options) {
  std::array<DimensionTable, 5> tables;
  TrainStats stats;

  std::string line;
  while (std::getline(corpus, line)) {
    ++stats.lines;
    auto entry = parse_corpus_line(line);
    if (!entry) {
      ++stats.skipped;
      continue;
    }
    const auto& [password, count] = *entry;
    const auto keys = dimension_keys(decompose(password, table), table);
    for (Dimension d : kAllDimensions) tables[index(d)].add(keys[index(d)], count);
    ++stats.accepted;
    stats.passwords += count;
  }
  if (corpus.bad()) throw IoError("error while reading corpus");
  if (stats.accepted == 0) throw Error("corpus contains no usable passwords");

  if (options.min_count > 1) tables[index(Dimension::base)].prune_below(options.min_count);

  ModelMeta meta{stats.accepted, table.hash_hex()};
  return {Model(std::move(tables), std::move(meta), options.bin_width), stats};
}

// ---------------------------------------------------------------------------
// Serialization

std::string escape_key(std::string_view key) {
  if (key.empty()) return "\\e";
  std::string out;
  out.reserve(key.size());
  for (char c : key) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_key(std::string_view escaped) {
  if (escaped == "\\e") return {};
  std::string out;
  out.reserve(escaped.size());
  for (std::size_t i = 0; i < escaped.size(); ++i) {
    if (escaped[i] != '\\') {
      out += escaped[i];
      continue;
    }
    if (++i == escaped.size()) throw FormatError("dangling escape in key");
    switch (escaped[i]) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      default: throw FormatError(std::string("unknown escape \\") + escaped[i]);
    }
  }
  if (out.empty()) throw FormatError("empty key must be written as \\e");
  return out;
}

void save_model(const Model& model, std::ostream& out) {
  out << "DPAR-MODEL " << kModelFormatVersion << '\n';
  out << "meta\tcorpus_lines=" << model.meta().corpus_lines
      << "\tl33t_hash=" << model.meta().l33t_hash << '\n';
  for (Dimension d : kAllDimensions) {
    const auto& t = model.table(d);
    out << '[' << to_string(d) << "] " << t.size() << ' ' << t.total() << '\n';
    for (const auto& [key, count] : t.counts()) {
      out << escape_key(key) << '\t' << count << '\n';
    }
  }
  if (!out) throw IoError("failed to write model");
}

void save_model(const Model& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  save_model(model, out);
  out.flush();
  if (!out) throw IoError("failed to write " + path.string());
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next(const char* what) {
    if (pos_ >= text_.size()) throw FormatError(std::string("truncated model: missing ") + what);
    auto nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) {
      throw FormatError(std::string("truncated model: unterminated ") + what);
    }
    auto line = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    ++line_no_;
    return line;
  }

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::string_view after_prefix(std::string_view s, std::string_view prefix, const char* what) {
  if (s.substr(0, prefix.size()) != prefix) {
    throw FormatError(std::string("malformed ") + what);
  }
  return s.substr(prefix.size());
}

}  // namespace

Model load_model(std::istream& in, double bin_width) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  LineReader reader(text);

  const auto header = reader.next("header");
  if (header.substr(0, 11) != "DPAR-MODEL ") throw FormatError("not a DPAR model (bad magic)");
  auto version = parse_u64(header.substr(11));
  if (!version || *version != kModelFormatVersion) {
    throw FormatError("unsupported model format version '" + std::string(header.substr(11)) + "'");
  }

  auto meta_line = after_prefix(reader.next("meta line"), "meta\tcorpus_lines=", "meta line");
  auto tab = meta_line.find('\t');
  if (tab == std::string_view::npos) throw FormatError("malformed meta line");
  auto lines = parse_u64(meta_line.substr(0, tab));
  if (!lines) throw FormatError("malformed corpus_lines in meta line");
  auto hash = after_prefix(meta_line.substr(tab + 1), "l33t_hash=", "meta line");
  if (hash.size() != 16 || !std::all_of(hash.begin(), hash.end(), [](char c) {
        return is_digit(c) || (c >= 'a' && c <= 'f');
      })) {
    throw FormatError("malformed l33t_hash in meta line");
  }
  ModelMeta meta{*lines, std::string(hash)};

  std::array<DimensionTable, 5> tables;
  for (Dimension d : kAllDimensions) {
    const std::string expected = "[" + std::string(to_string(d)) + "] ";
    auto rest = after_prefix(reader.next("section header"), expected,
                             ("section header for " + std::string(to_string(d))).c_str());
    auto space = rest.find(' ');
    if (space == std::string_view::npos) throw FormatError("malformed section header");
    auto entries = parse_u64(rest.substr(0, space));
    auto total = parse_u64(rest.substr(space + 1));
    if (!entries || !total) throw FormatError("malformed section header");

    DimensionTable::Counts counts;
    std::string previous;
    for (std::uint64_t i = 0; i < *entries; ++i) {
      auto line = reader.next("table entry");
      auto t = line.rfind('\t');
      if (t == std::string_view::npos) {
        throw FormatError("malformed entry on line " + std::to_string(reader.line_no()));
      }
      auto count = parse_u64(line.substr(t + 1));
      if (!count || *count == 0) {
        throw FormatError("bad count on line " + std::to_string(reader.line_no()));
      }
      std::string key = unescape_key(line.substr(0, t));
      if (i > 0 && !(previous < key)) {
        throw FormatError("keys out of order on line " + std::to_string(reader.line_no()));
      }
      previous = key;
      counts.emplace_hint(counts.end(), std::move(key), *count);
    }
    DimensionTable table(std::move(counts));
    if (table.total() != *total) {
      throw FormatError("total mismatch in [" + std::string(to_string(d)) + "] section");
    }
    tables[index(d)] = std::move(table);
  }
  if (!reader.at_end()) throw FormatError("trailing data after last section");

  return Model(std::move(tables), std::move(meta), bin_width);
}

Model load_model(const std::filesystem::path& path, double bin_width) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model " + path.string());
  return load_model(in, bin_width);
}

}  // namespace dpar
