#include "dpar/recommend.hpp"

#include <algorithm>

#include "dpar/charset.hpp"
#include "dpar/edit_distance.hpp"
#include "dpar/error.hpp"

namespace dpar {

void validate(const RecommenderConfig& config) {
  if (config.repeat_count == 0) throw ContractError("repeat_count must be at least 1");
  auto sorted = config.dimension_priority;
  std::sort(sorted.begin(), sorted.end());
  const std::array<Dimension, 4> expected = {Dimension::prefix, Dimension::suffix,
                                             Dimension::l33t, Dimension::cap};
  if (sorted != expected) {
    throw ContractError("dimension priority must be a permutation of prefix,suffix,l33t,cap");
  }
  if (!(config.strength.crack_rate > 0.0)) throw ContractError("crack rate must be positive");
}

std::array<Dimension, 4> parse_priority(std::string_view list) {
  std::array<Dimension, 4> out{};
  std::size_t n = 0;
  while (!list.empty()) {
    auto comma = list.find(',');
    auto name = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    auto d = parse_dimension(name);
    if (!d || *d == Dimension::base || n == out.size()) {
      throw ContractError("bad dimension priority list");
    }
    out[n++] = *d;
  }
  if (n != out.size()) throw ContractError("dimension priority must name four dimensions");
  RecommenderConfig probe;
  probe.dimension_priority = out;
  validate(probe);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

char random_char(Rng& rng) { return kDigitSymbolAlphabet[rng.uniform(kDigitSymbolAlphabet.size())]; }

char replacement_for(char current, Rng& rng) {
  const std::size_t skip = kDigitSymbolAlphabet.find(current);
  std::size_t k = rng.uniform(kDigitSymbolAlphabet.size() - 1);
  if (k >= skip) ++k;
  return kDigitSymbolAlphabet[k];
}

std::string replaced_at(std::string_view run, std::size_t pos, Rng& rng) {
  std::string out(run);
  out[pos] = replacement_for(run[pos], rng);
  return out;
}

std::vector<bool> transformed_positions(const PasswordParts& parts) {
  std::vector<bool> used(parts.base_word.size(), false);
  for (std::size_t p : parts.cap_positions) {
    if (p < used.size()) used[p] = true;
  }
  for (const auto& sub : parts.l33t_subs) {
    if (sub.position < used.size()) used[sub.position] = true;
  }
  return used;
}

}  // namespace

std::array<std::string, 3> generate_prefix_suffix(std::string_view run, Rng& rng) {
  if (!std::all_of(run.begin(), run.end(), is_digit_or_symbol)) {
    throw ContractError("prefix/suffix generator accepts digits and symbols only");
  }
  std::array<std::string, 3> out;
  switch (run.size()) {
    case 0:
      for (std::size_t len = 1; len <= 3; ++len) {
        for (std::size_t i = 0; i < len; ++i) out[len - 1] += random_char(rng);
      }
      break;
    case 1:
      out[0] = replaced_at(run, 0, rng);
      out[1] = std::string(run) + random_char(rng);
      out[2] = std::string(run) + random_char(rng);
      out[2] += random_char(rng);
      break;
    case 2:
      out[0] = replaced_at(run, 0, rng);
      out[1] = replaced_at(run, 1, rng);
      out[2] = std::string(run) + random_char(rng);
      break;
    default:
      for (auto& s : out) s = replaced_at(run, rng.uniform(run.size()), rng);
  }
  return out;
}

std::optional<L33tSub> generate_l33t(const PasswordParts& parts, const L33tTable& table, Rng& rng) {
  const std::string& base = parts.base_word;
  if (base.size() < 3) return std::nullopt;
  const auto used = transformed_positions(parts);

  const auto eligible = [&](std::size_t pos, char letter) {
    return !used[pos] && base[pos] == letter;
  };

  std::vector<std::size_t> applicable;  // table entry indices
  const auto entries = table.entries();
  for (std::size_t e = 0; e < entries.size(); ++e) {
    for (std::size_t pos = 1; pos + 1 < base.size(); ++pos) {
      if (eligible(pos, entries[e].letter)) {
        applicable.push_back(e);
        break;
      }
    }
  }
  if (applicable.empty()) return std::nullopt;

  const L33tEntry& entry = entries[applicable[rng.uniform(applicable.size())]];
  std::vector<std::size_t> positions;
  for (std::size_t pos = 1; pos + 1 < base.size(); ++pos) {
    if (eligible(pos, entry.letter)) positions.push_back(pos);
  }
  return L33tSub{positions[rng.uniform(positions.size())], entry.symbol, entry.letter};
}

std::optional<std::size_t> generate_capitalization(const PasswordParts& parts, Rng& rng,
                                                   std::optional<std::size_t> reserved) {
  const auto used = transformed_positions(parts);
  std::vector<std::size_t> positions;
  for (std::size_t pos = 0; pos < parts.base_word.size(); ++pos) {
    if (!used[pos] && is_lower(parts.base_word[pos]) && reserved != pos) {
      positions.push_back(pos);
    }
  }
  if (positions.empty()) return std::nullopt;
  return positions[rng.uniform(positions.size())];
}

std::vector<Candidate> generate_candidates(const PasswordParts& parts, const L33tTable& table,
                                           const RecommenderConfig& config, Rng& rng) {
  validate(config);

  std::vector<std::string> prefixes{parts.prefix};
  std::vector<std::string> suffixes{parts.suffix};
  for (std::size_t round = 0; round < config.repeat_count; ++round) {
    for (auto& s : generate_prefix_suffix(parts.prefix, rng)) prefixes.push_back(std::move(s));
    for (auto& s : generate_prefix_suffix(parts.suffix, rng)) suffixes.push_back(std::move(s));
  }

  std::vector<std::vector<L33tSub>> l33t_options{parts.l33t_subs};
  const auto new_sub = generate_l33t(parts, table, rng);
  if (new_sub) {
    auto subs = parts.l33t_subs;
    subs.push_back(*new_sub);
    std::sort(subs.begin(), subs.end(),
              [](const L33tSub& a, const L33tSub& b) { return a.position < b.position; });
    l33t_options.push_back(std::move(subs));
  }

  std::vector<std::vector<std::size_t>> cap_options{parts.cap_positions};
  const auto new_cap = generate_capitalization(
      parts, rng, new_sub ? std::optional<std::size_t>(new_sub->position) : std::nullopt);
  if (new_cap) {
    auto caps = parts.cap_positions;
    caps.insert(std::upper_bound(caps.begin(), caps.end(), *new_cap), *new_cap);
    cap_options.push_back(std::move(caps));
  }

  std::vector<Candidate> out;
  out.reserve(prefixes.size() * suffixes.size() * l33t_options.size() * cap_options.size());
  for (std::size_t p = 0; p < prefixes.size(); ++p) {
    for (std::size_t s = 0; s < suffixes.size(); ++s) {
      for (std::size_t l = 0; l < l33t_options.size(); ++l) {
        for (std::size_t c = 0; c < cap_options.size(); ++c) {
          if (p == 0 && s == 0 && l == 0 && c == 0) continue;
          Candidate cand;
          cand.parts.prefix = prefixes[p];
          cand.parts.suffix = suffixes[s];
          cand.parts.base_word = parts.base_word;
          cand.parts.l33t_subs = l33t_options[l];
          cand.parts.cap_positions = cap_options[c];
          cand.password = recompose(cand.parts);
          cand.parts.raw = cand.password;
          out.push_back(std::move(cand));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ScoredPassword score_password(const Scorer& scorer, std::string_view password) {
  ScoredPassword out;
  out.password = std::string(password);
  out.parts = scorer.parse(password);
  out.scores = scorer.scores(out.parts);
  out.bits = scorer.bits(out.scores.total());
  return out;
}

std::vector<ScoredCandidate> score_candidates(const Scorer& scorer, const ScoredPassword& original,
                                              std::span<const Candidate> candidates,
                                              const PasswordPolicy& policy) {
  std::vector<ScoredCandidate> out;
  out.reserve(candidates.size());
  for (const auto& cand : candidates) {
    ScoredCandidate sc;
    static_cast<ScoredPassword&>(sc) = score_password(scorer, cand.password);
    sc.distance = levenshtein(original.password, cand.password);
    sc.base_preserved = sc.parts.base_word == original.parts.base_word;
    sc.policy_valid = validate_policy(cand.password, policy).valid;
    out.push_back(std::move(sc));
  }
  return out;
}

bool outranks(const ScoredCandidate& a, const ScoredCandidate& b, const ScoredPassword& original,
              const std::array<Dimension, 4>& priority) {
  if (a.bits != b.bits) return a.bits > b.bits;
  for (Dimension d : priority) {
    const double gain_a = original.scores[d] - a.scores[d];
    const double gain_b = original.scores[d] - b.scores[d];
    if (gain_a != gain_b) return gain_a > gain_b;
  }
  return a.password < b.password;
}

std::vector<std::vector<std::size_t>> button_groups(std::span<const std::size_t> distances) {
  constexpr std::size_t kMaxBuckets = 6;
  constexpr std::size_t kMaxButtons = 3;
  const std::size_t used = std::min(distances.size(), kMaxBuckets);
  const std::size_t buttons = std::min(used, kMaxButtons);
  std::vector<std::vector<std::size_t>> groups;
  if (buttons == 0) return groups;

  const std::size_t base = used / buttons;
  const std::size_t extra = used % buttons;
  std::size_t next = 0;
  for (std::size_t g = 0; g < buttons; ++g) {
    const std::size_t size = base + (g < extra ? 1 : 0);
    groups.emplace_back(distances.begin() + static_cast<std::ptrdiff_t>(next),
                        distances.begin() + static_cast<std::ptrdiff_t>(next + size));
    next += size;
  }
  return groups;
}

namespace {

Recommendation to_recommendation(const ScoredCandidate& c, const ScoredPassword& original,
                                 const StrengthConfig& strength) {
  Recommendation r;
  r.password = c.password;
  r.parts = c.parts;
  r.bits = c.bits;
  r.distance = c.distance;
  r.mask_preview = mask_preview(original.password, c.password);
  const auto t = crack_time(c.bits, strength.crack_rate);
  r.crack_seconds = t.seconds;
  r.crack_human = t.human;
  r.labels.asterisks = r.mask_preview;
  r.labels.num_changes = std::to_string(c.distance) + (c.distance == 1 ? " change" : " changes");
  r.labels.hack_time = t.human;
  return r;
}

}  // namespace

Selection select_recommendations(std::span<const ScoredCandidate> candidates,
                                 const ScoredPassword& original, const RecommenderConfig& config,
                                 Rng& rng) {
  Selection sel;
  for (const auto& c : candidates) {
    if (c.distance == 0 || c.bits < original.bits) continue;
    if (config.min_strength && c.bits < *config.min_strength) continue;
    if (!c.base_preserved) continue;
    if (config.enforce_policy && !c.policy_valid) continue;

    auto [it, inserted] = sel.table.try_emplace(c.distance, c);
    if (!inserted && outranks(c, it->second, original, config.dimension_priority)) {
      it->second = c;
    }
  }

  std::vector<std::size_t> distances;
  distances.reserve(sel.table.size());
  for (const auto& [ld, _] : sel.table) distances.push_back(ld);

  for (const auto& group : button_groups(distances)) {
    const std::size_t pick = group.size() == 1 ? group.front() : group[rng.uniform(group.size())];
    sel.buttons.push_back(to_recommendation(sel.table.at(pick), original, config.strength));
  }
  return sel;
}

RecommendResult recommend(const Scorer& scorer, std::string_view password,
                          const RecommenderConfig& config) {
  validate(config);
  if (config.enforce_policy) {
    auto policy = validate_policy(password, config.policy);
    if (!policy.valid) throw PolicyError(std::move(policy.violations));
  }

  RecommendResult result;
  result.seed = config.seed ? *config.seed : Rng::entropy_seed();
  Rng rng(result.seed);

  result.original = score_password(scorer, password);
  result.report = make_report(result.original.scores.total(), result.original.bits, config.strength);

  const auto candidates = generate_candidates(result.original.parts, scorer.table(), config, rng);
  result.candidate_count = candidates.size();
  const auto scored = score_candidates(scorer, result.original, candidates, config.policy);
  result.buttons = select_recommendations(scored, result.original, config, rng).buttons;
  return result;
}

}  // namespace dpar
