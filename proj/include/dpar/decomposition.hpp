#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dpar/l33t.hpp"

namespace dpar {

class Model;

struct L33tSub {
  std::size_t position;  // index into base_word
  char symbol;
  char letter;

  friend bool operator==(const L33tSub&, const L33tSub&) = default;
};

/// The five-dimension view of one password.
///
/// `base_word` is lowercase with l33t undone. `l33t_subs` and `cap_positions`
/// are sorted by position and index into `base_word`. For a password with no
/// letters at all, `base_word` holds the whole password verbatim.
struct PasswordParts {
  std::string prefix;
  std::string suffix;
  std::string base_word;
  std::vector<L33tSub> l33t_subs;
  std::vector<std::size_t> cap_positions;
  std::string raw;

  friend bool operator==(const PasswordParts&, const PasswordParts&) = default;
};

/// Splits a password into prefix, suffix, base word, l33t list and
/// capitalization pattern.
///
/// An interior digit or symbol that several table entries could have produced
/// is resolved by trying every combination and keeping the base word with the
/// highest count in `model`. Without a model (or on equal counts) the earliest
/// table entries win. Interior characters with no table entry stay in the base
/// word verbatim.
PasswordParts decompose(std::string_view password, const L33tTable& table,
                        const Model* model = nullptr);

/// prefix + (base with caps and l33t applied) + suffix.
/// Throws InvariantError when positions overlap, are out of range, or point
/// at characters that cannot take the requested transformation.
std::string recompose(const PasswordParts& parts);

/// Throws InvariantError describing the first broken invariant.
void check_invariants(const PasswordParts& parts, const L33tTable& table);

/// Position-free l33t model key: the substituted symbols ordered by table
/// entry, comma separated ("@,0"). Empty when there are no substitutions.
std::string l33t_key(const PasswordParts& parts, const L33tTable& table);

/// Capitalization model key, e.g. "0,-1". The last base position renders as
/// -1 (unless it is also position 0).
std::string cap_key(const PasswordParts& parts);

/// Display form of the capitalization pattern, with -1 for the last letter.
std::vector<long> cap_display(const PasswordParts& parts);

}  // namespace dpar
