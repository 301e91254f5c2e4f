#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpar/decomposition.hpp"
#include "dpar/l33t.hpp"
#include "dpar/model.hpp"
#include "dpar/policy.hpp"
#include "dpar/rng.hpp"
#include "dpar/strength.hpp"

namespace dpar {

struct RecommenderConfig {
  /// Rounds of prefix/suffix generation; each round adds three options.
  std::size_t repeat_count = 4;
  /// Candidates below this strength (bits) are never recommended.
  std::optional<double> min_strength;
  /// Tie-break order among candidates with equal distance and strength.
  std::array<Dimension, 4> dimension_priority = {Dimension::prefix, Dimension::suffix,
                                                 Dimension::l33t, Dimension::cap};
  StrengthConfig strength;
  std::optional<std::uint64_t> seed;
  PasswordPolicy policy;
  /// When false, the input and candidates are not checked against `policy`.
  bool enforce_policy = true;
};

/// Throws ContractError if repeat_count is 0 or the priority list is not a
/// permutation of {prefix, suffix, l33t, cap}.
void validate(const RecommenderConfig& config);

/// Parses "prefix,suffix,l33t,cap"-style lists.
std::array<Dimension, 4> parse_priority(std::string_view list);

// ---------------------------------------------------------------------------
// Per-dimension generators

/// Three tweaked variants of a digit/symbol run. An empty run yields fresh
/// strings of length 1, 2 and 3. A one-character run yields one replacement
/// plus the original with one and two characters appended. A two-character
/// run yields each position replaced plus one append. Longer runs yield three
/// single-position replacements. Replacements always differ from the
/// character they replace. Throws ContractError on letters or characters
/// outside the digit/symbol alphabet.
std::array<std::string, 3> generate_prefix_suffix(std::string_view run, Rng& rng);

/// One new letter -> symbol substitution on an interior base position that is
/// not already capitalized or substituted. The table entry is drawn first,
/// then one of its eligible positions. Interior-only so that the tweaked
/// password decomposes back to the same base word.
std::optional<L33tSub> generate_l33t(const PasswordParts& parts, const L33tTable& table, Rng& rng);

/// One lowercase base position to capitalize, avoiding existing
/// capitalizations, substitutions, and `reserved`.
std::optional<std::size_t> generate_capitalization(const PasswordParts& parts, Rng& rng,
                                                   std::optional<std::size_t> reserved = {});

/// A tweaked password before scoring.
struct Candidate {
  PasswordParts parts;
  std::string password;
};

/// Cartesian product of the option lists for prefix, suffix, l33t and
/// capitalization, without the all-original combination. With the default
/// repeat_count and productive generators that is 13*13*2*2 - 1 = 675.
std::vector<Candidate> generate_candidates(const PasswordParts& parts, const L33tTable& table,
                                           const RecommenderConfig& config, Rng& rng);

// ---------------------------------------------------------------------------
// Scoring and selection

struct ScoredPassword {
  std::string password;
  PasswordParts parts;
  DimensionScores scores;
  double bits = 0.0;
};

struct ScoredCandidate : ScoredPassword {
  std::size_t distance = 0;
  bool base_preserved = true;
  bool policy_valid = true;
};

ScoredPassword score_password(const Scorer& scorer, std::string_view password);

std::vector<ScoredCandidate> score_candidates(const Scorer& scorer, const ScoredPassword& original,
                                              std::span<const Candidate> candidates,
                                              const PasswordPolicy& policy);

/// Orders two candidates at the same distance: higher strength wins, then the
/// larger strength gain over the original in the first priority dimension
/// that differs, then the lexicographically smaller password.
bool outranks(const ScoredCandidate& a, const ScoredCandidate& b, const ScoredPassword& original,
              const std::array<Dimension, 4>& priority);

struct ButtonLabels {
  std::string asterisks;    // mask preview
  std::string num_changes;  // "2 changes"
  std::string hack_time;    // crack time of the candidate
};

struct Recommendation {
  std::string password;
  PasswordParts parts;
  double bits = 0.0;
  std::size_t distance = 0;
  std::string mask_preview;
  ButtonLabels labels;
  double crack_seconds = 0.0;
  std::string crack_human;
};

/// Strongest surviving candidate per edit distance.
using CandidateTable = std::map<std::size_t, ScoredCandidate>;

struct Selection {
  CandidateTable table;
  std::vector<Recommendation> buttons;  // ascending distance, at most 3
};

/// Distances each button draws from, given the populated distances in
/// ascending order. The first six populated distances are split into up to
/// three consecutive groups of as-equal-as-possible size, so LDs 1..6 give
/// {1,2},{3,4},{5,6}.
std::vector<std::vector<std::size_t>> button_groups(std::span<const std::size_t> distances);

/// Drops candidates weaker than the original (or below min_strength), those
/// whose base word changed, and (when enforced) policy-invalid ones; keeps the
/// best per distance; then picks one entry per button group uniformly.
Selection select_recommendations(std::span<const ScoredCandidate> candidates,
                                 const ScoredPassword& original, const RecommenderConfig& config,
                                 Rng& rng);

struct RecommendResult {
  ScoredPassword original;
  StrengthReport report;
  std::vector<Recommendation> buttons;
  std::size_t candidate_count = 0;
  std::uint64_t seed = 0;
};

/// Full pipeline: policy check, decomposition, scoring, generation, selection.
/// Throws PolicyError when the policy is enforced and violated.
RecommendResult recommend(const Scorer& scorer, std::string_view password,
                          const RecommenderConfig& config);

}  // namespace dpar
