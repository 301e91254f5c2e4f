#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dpar {

enum class EditOp : char { match = '=', substitute = 'S', insert = 'I', remove = 'D' };

/// Unit-cost Levenshtein distance. Uses the bit-parallel algorithm when the
/// shorter string fits in 64 characters, the quadratic DP otherwise.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// Quadratic DP with two rows.
std::size_t levenshtein_dp(std::string_view a, std::string_view b);

/// Bit-parallel distance; requires min(|a|, |b|) <= 64.
std::size_t levenshtein_bitparallel(std::string_view a, std::string_view b);

/// One minimal edit script turning `from` into `to`. Among minimal scripts,
/// match/substitute is preferred over insertion, and insertion over deletion,
/// while tracing back from the end; this places insertions as far left as
/// possible.
std::vector<EditOp> edit_script(std::string_view from, std::string_view to);

/// Renders `to` with characters kept from `from` as '*' and substituted or
/// inserted characters in the clear. Deleted characters leave no mark.
std::string mask_preview(std::string_view from, std::string_view to);

}  // namespace dpar
