#include "dpar/decomposition.hpp"

#include <algorithm>
#include <optional>

#include "dpar/charset.hpp"
#include "dpar/error.hpp"
#include "dpar/model.hpp"

namespace dpar {
namespace {

// Upper bound on reverse-l33t interpretations scored against the model.
constexpr std::size_t kMaxInterpretations = 4096;

struct AmbiguousSlot {
  std::size_t position;
  char symbol;
  std::vector<std::size_t> entries;
};

void resolve_with_model(std::string& base, const std::vector<AmbiguousSlot>& slots,
                        std::vector<std::size_t>& choice, const L33tTable& table,
                        const Model& model) {
  std::size_t combinations = 1;
  for (const auto& slot : slots) {
    combinations *= slot.entries.size();
    if (combinations > kMaxInterpretations) return;
  }

  const DimensionTable& bases = model.table(Dimension::base);
  std::vector<std::size_t> current(slots.size(), 0);
  std::vector<std::size_t> best = current;
  std::uint64_t best_count = bases.count(base);
  std::string candidate = base;

  // Odometer over slot choices, first slot varying slowest so earlier table
  // entries are visited first and win ties.
  for (std::size_t n = 1; n < combinations; ++n) {
    for (std::size_t k = slots.size(); k-- > 0;) {
      if (++current[k] < slots[k].entries.size()) break;
      current[k] = 0;
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      candidate[slots[k].position] = table.entries()[slots[k].entries[current[k]]].letter;
    }
    const std::uint64_t c = bases.count(candidate);
    if (c > best_count) {
      best_count = c;
      best = current;
    }
  }

  choice = best;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    base[slots[k].position] = table.entries()[slots[k].entries[best[k]]].letter;
  }
}

}  // namespace

PasswordParts decompose(std::string_view password, const L33tTable& table, const Model* model) {
  PasswordParts parts;
  parts.raw = std::string(password);

  const auto first = std::find_if(password.begin(), password.end(), is_letter);
  if (first == password.end()) {
    parts.base_word = parts.raw;
    return parts;
  }
  const auto last = std::find_if(password.rbegin(), password.rend(), is_letter).base();

  parts.prefix.assign(password.begin(), first);
  parts.suffix.assign(last, password.end());
  const std::string_view middle(&*first, static_cast<std::size_t>(last - first));

  std::vector<AmbiguousSlot> slots;
  parts.base_word.reserve(middle.size());
  for (std::size_t i = 0; i < middle.size(); ++i) {
    const char c = middle[i];
    if (is_upper(c)) {
      parts.cap_positions.push_back(i);
      parts.base_word += to_lower(c);
    } else if (is_lower(c)) {
      parts.base_word += c;
    } else {
      auto entries = table.entries_for_symbol(c);
      if (entries.empty()) {
        parts.base_word += c;
        continue;
      }
      parts.base_word += table.entries()[entries.front()].letter;
      slots.push_back({i, c, std::move(entries)});
    }
  }

  std::vector<std::size_t> choice(slots.size(), 0);
  const bool ambiguous = std::any_of(slots.begin(), slots.end(),
                                     [](const AmbiguousSlot& s) { return s.entries.size() > 1; });
  if (model != nullptr && ambiguous) {
    resolve_with_model(parts.base_word, slots, choice, table, *model);
  }

  parts.l33t_subs.reserve(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const auto& entry = table.entries()[slots[k].entries[choice[k]]];
    parts.l33t_subs.push_back({slots[k].position, slots[k].symbol, entry.letter});
  }
  return parts;
}

std::string recompose(const PasswordParts& parts) {
  std::string middle = parts.base_word;
  std::vector<bool> touched(middle.size(), false);

  for (std::size_t pos : parts.cap_positions) {
    if (pos >= middle.size()) {
      throw InvariantError("capitalization position " + std::to_string(pos) + " out of range");
    }
    if (touched[pos]) {
      throw InvariantError("duplicate capitalization position " + std::to_string(pos));
    }
    if (!is_lower(middle[pos])) {
      throw InvariantError("capitalization position " + std::to_string(pos) +
                           " is not a lowercase letter");
    }
    touched[pos] = true;
    middle[pos] = to_upper(middle[pos]);
  }
  for (const auto& sub : parts.l33t_subs) {
    if (sub.position >= middle.size()) {
      throw InvariantError("l33t position " + std::to_string(sub.position) + " out of range");
    }
    if (touched[sub.position]) {
      throw InvariantError("l33t position " + std::to_string(sub.position) +
                           " collides with another transformation");
    }
    if (middle[sub.position] != sub.letter) {
      throw InvariantError("l33t position " + std::to_string(sub.position) +
                           " does not hold letter '" + sub.letter + "'");
    }
    touched[sub.position] = true;
    middle[sub.position] = sub.symbol;
  }

  std::string out;
  out.reserve(parts.prefix.size() + middle.size() + parts.suffix.size());
  out += parts.prefix;
  out += middle;
  out += parts.suffix;
  return out;
}

void check_invariants(const PasswordParts& parts, const L33tTable& table) {
  const auto has_letter = [](const std::string& s) {
    return std::any_of(s.begin(), s.end(), is_letter);
  };
  if (has_letter(parts.prefix)) throw InvariantError("prefix contains a letter");
  if (has_letter(parts.suffix)) throw InvariantError("suffix contains a letter");
  if (has_letter(parts.raw) && parts.base_word.empty()) {
    throw InvariantError("base word is empty although the password has letters");
  }
  if (!std::is_sorted(parts.cap_positions.begin(), parts.cap_positions.end())) {
    throw InvariantError("capitalization positions are not sorted");
  }
  if (!std::is_sorted(parts.l33t_subs.begin(), parts.l33t_subs.end(),
                      [](const L33tSub& a, const L33tSub& b) { return a.position < b.position; })) {
    throw InvariantError("l33t substitutions are not sorted by position");
  }
  for (const auto& sub : parts.l33t_subs) {
    if (!table.index_of(sub.letter, sub.symbol)) {
      throw InvariantError(std::string("l33t pair ") + sub.letter + "->" + sub.symbol +
                           " is not in the table");
    }
  }
  if (recompose(parts) != parts.raw) {
    throw InvariantError("parts do not recompose to the raw password");
  }
}

std::string l33t_key(const PasswordParts& parts, const L33tTable& table) {
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (entry, position)
  order.reserve(parts.l33t_subs.size());
  for (const auto& sub : parts.l33t_subs) {
    auto idx = table.index_of(sub.letter, sub.symbol);
    if (!idx) {
      throw InvariantError(std::string("l33t pair ") + sub.letter + "->" + sub.symbol +
                           " is not in the table");
    }
    order.emplace_back(*idx, sub.position);
  }
  std::sort(order.begin(), order.end());

  std::string key;
  for (const auto& [entry, pos] : order) {
    if (!key.empty()) key += ',';
    key += table.entries()[entry].symbol;
  }
  return key;
}

std::vector<long> cap_display(const PasswordParts& parts) {
  std::vector<long> out;
  out.reserve(parts.cap_positions.size());
  const std::size_t last = parts.base_word.empty() ? 0 : parts.base_word.size() - 1;
  for (std::size_t pos : parts.cap_positions) {
    out.push_back(pos == last && pos != 0 ? -1L : static_cast<long>(pos));
  }
  return out;
}

std::string cap_key(const PasswordParts& parts) {
  std::string key;
  for (long p : cap_display(parts)) {
    if (!key.empty()) key += ',';
    key += std::to_string(p);
  }
  return key;
}

}  // namespace dpar
