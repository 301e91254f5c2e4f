#include "dpar/edit_distance.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "dpar/error.hpp"

namespace dpar {

std::size_t levenshtein_dp(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t levenshtein_bitparallel(std::string_view a, std::string_view b) {
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t m = a.size();
  if (m > 64) throw ContractError("bit-parallel Levenshtein needs a pattern of at most 64 chars");
  if (m == 0) return b.size();

  std::array<std::uint64_t, 256> peq{};
  for (std::size_t i = 0; i < m; ++i) {
    peq[static_cast<unsigned char>(a[i])] |= std::uint64_t{1} << i;
  }

  const std::uint64_t high = std::uint64_t{1} << (m - 1);
  std::uint64_t pv = ~std::uint64_t{0};
  std::uint64_t mv = 0;
  std::size_t score = m;
  for (char c : b) {
    const std::uint64_t eq = peq[static_cast<unsigned char>(c)];
    const std::uint64_t xv = eq | mv;
    const std::uint64_t xh = (((eq & pv) + pv) ^ pv) | eq;
    std::uint64_t ph = mv | ~(xh | pv);
    std::uint64_t mh = pv & xh;
    if (ph & high) {
      ++score;
    } else if (mh & high) {
      --score;
    }
    ph = (ph << 1) | 1;
    mh <<= 1;
    pv = mh | ~(xv | ph);
    mv = ph & xv;
  }
  return score;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (std::min(a.size(), b.size()) <= 64) return levenshtein_bitparallel(a, b);
  return levenshtein_dp(a, b);
}

std::vector<EditOp> edit_script(std::string_view from, std::string_view to) {
  const std::size_t n = from.size();
  const std::size_t m = to.size();
  const std::size_t w = m + 1;
  std::vector<std::size_t> d((n + 1) * w);
  for (std::size_t i = 0; i <= n; ++i) d[i * w] = i;
  for (std::size_t j = 0; j <= m; ++j) d[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t cost = from[i - 1] == to[j - 1] ? 0 : 1;
      d[i * w + j] = std::min({d[(i - 1) * w + j] + 1, d[i * w + j - 1] + 1,
                               d[(i - 1) * w + j - 1] + cost});
    }
  }

  std::vector<EditOp> ops;
  ops.reserve(std::max(n, m));
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const std::size_t here = d[i * w + j];
    if (i > 0 && j > 0) {
      const bool same = from[i - 1] == to[j - 1];
      if (d[(i - 1) * w + j - 1] + (same ? 0 : 1) == here) {
        ops.push_back(same ? EditOp::match : EditOp::substitute);
        --i;
        --j;
        continue;
      }
    }
    if (j > 0 && d[i * w + j - 1] + 1 == here) {
      ops.push_back(EditOp::insert);
      --j;
      continue;
    }
    ops.push_back(EditOp::remove);
    --i;
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

std::string mask_preview(std::string_view from, std::string_view to) {
  std::string out;
  out.reserve(to.size());
  std::size_t j = 0;
  for (EditOp op : edit_script(from, to)) {
    switch (op) {
      case EditOp::match:
        out += '*';
        ++j;
        break;
      case EditOp::substitute:
      case EditOp::insert:
        out += to[j++];
        break;
      case EditOp::remove:
        break;
    }
  }
  return out;
}

}  // namespace dpar
