#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dpar {

struct L33tEntry {
  char letter;  // lowercase source letter
  char symbol;  // digit or keyboard symbol that replaces it

  friend bool operator==(const L33tEntry&, const L33tEntry&) = default;
};

/// Ordered list of letter -> symbol substitutions. Entry order matters: it is
/// the tie-break for reverse lookup and the sort order of l33t model keys.
class L33tTable {
 public:
  explicit L33tTable(std::vector<L33tEntry> entries);

  /// The 14 built-in substitutions over {a,e,i,o,s,x,z,t,g}.
  static const L33tTable& default_table();

  /// Parses `letter<TAB>symbol` lines. Blank lines are ignored.
  static L33tTable parse(std::string_view text);
  static L33tTable load(const std::filesystem::path& path);

  std::span<const L33tEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Indices of the entries whose symbol is `symbol`, in table order.
  std::vector<std::size_t> entries_for_symbol(char symbol) const;
  std::vector<std::size_t> entries_for_letter(char letter) const;
  std::optional<std::size_t> index_of(char letter, char symbol) const;
  bool has_letter(char letter) const;

  std::string serialize() const;

  /// FNV-1a 64 of serialize(), as 16 lowercase hex digits.
  std::string hash_hex() const;

  friend bool operator==(const L33tTable&, const L33tTable&) = default;

 private:
  std::vector<L33tEntry> entries_;
};

}  // namespace dpar
