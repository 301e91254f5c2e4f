#include "dpar/l33t.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "dpar/charset.hpp"
#include "dpar/error.hpp"

namespace dpar {

L33tTable::L33tTable(std::vector<L33tEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw FormatError("l33t table is empty");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!is_lower(e.letter)) {
      throw FormatError(std::string("l33t source must be a lowercase letter, got '") +
                        e.letter + "'");
    }
    if (!is_digit_or_symbol(e.symbol)) {
      throw FormatError(std::string("l33t target must be a digit or symbol, got '") +
                        e.symbol + "'");
    }
    if (std::find(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(i), e) !=
        entries_.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw FormatError(std::string("duplicate l33t entry ") + e.letter + "->" + e.symbol);
    }
  }
}

const L33tTable& L33tTable::default_table() {
  static const L33tTable table({
      {'a', '@'}, {'a', '4'}, {'e', '3'}, {'i', '1'}, {'i', '!'},
      {'i', '|'}, {'o', '0'}, {'s', '$'}, {'s', '5'}, {'x', '%'},
      {'z', '2'}, {'t', '+'}, {'t', '7'}, {'g', '9'},
  });
  return table;
}

L33tTable L33tTable::parse(std::string_view text) {
  std::vector<L33tEntry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.size() != 3 || line[1] != '\t') {
      throw FormatError("l33t table line " + std::to_string(line_no) +
                        ": expected letter<TAB>symbol");
    }
    entries.push_back({line[0], line[2]});
  }
  return L33tTable(std::move(entries));
}

L33tTable L33tTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open l33t table " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<std::size_t> L33tTable::entries_for_symbol(char symbol) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].symbol == symbol) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> L33tTable::entries_for_letter(char letter) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].letter == letter) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> L33tTable::index_of(char letter, char symbol) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].letter == letter && entries_[i].symbol == symbol) return i;
  }
  return std::nullopt;
}

bool L33tTable::has_letter(char letter) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [letter](const L33tEntry& e) { return e.letter == letter; });
}

std::string L33tTable::serialize() const {
  std::string out;
  out.reserve(entries_.size() * 4);
  for (const auto& e : entries_) {
    out += e.letter;
    out += '\t';
    out += e.symbol;
    out += '\n';
  }
  return out;
}

std::string L33tTable::hash_hex() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : serialize()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace dpar
