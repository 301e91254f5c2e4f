#include <doctest.h>

#include <random>

#include "dpar/edit_distance.hpp"
#include "support.hpp"

using namespace dpar;

namespace {

std::string random_string(std::mt19937_64& gen, std::size_t max_len, std::string_view alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> ch(0, alphabet.size() - 1);
  std::string s(len(gen), ' ');
  for (auto& c : s) c = alphabet[ch(gen)];
  return s;
}

// Applies an edit script to `from`, taking inserted and substituted
// characters from `to`; must reproduce `to` exactly.
std::string apply(const std::vector<EditOp>& ops, std::string_view from, std::string_view to) {
  std::string out;
  std::size_t i = 0, j = 0;
  for (EditOp op : ops) {
    switch (op) {
      case EditOp::match:
        REQUIRE(from[i] == to[j]);
        out += from[i++];
        ++j;
        break;
      case EditOp::substitute:
        REQUIRE(from[i] != to[j]);
        out += to[j++];
        ++i;
        break;
      case EditOp::insert:
        out += to[j++];
        break;
      case EditOp::remove:
        ++i;
        break;
    }
  }
  CHECK(i == from.size());
  return out;
}

}  // namespace

TEST_CASE("distance examples") {
  CHECK(levenshtein("amsterdam", "am5terDam&#") == 4);
  CHECK(levenshtein("same", "same") == 0);
  CHECK(levenshtein("", "abc") == 3);
  CHECK(levenshtein("kitten", "sitting") == 3);
}

TEST_CASE("distance matches the full-matrix reference on random pairs") {
  std::mt19937_64 gen(99);
  for (int i = 0; i < 1000; ++i) {
    const auto alphabet = i % 2 ? std::string_view("ab1") : testing::kPrintable;
    const auto a = random_string(gen, 30, alphabet);
    const auto b = random_string(gen, 30, alphabet);
    const auto expect = testing::reference_levenshtein(a, b);
    REQUIRE(levenshtein(a, b) == expect);
    REQUIRE(levenshtein_dp(a, b) == expect);
    REQUIRE(levenshtein_bitparallel(a, b) == expect);
  }
}

TEST_CASE("long strings take the quadratic path and agree") {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 20; ++i) {
    auto a = random_string(gen, 200, "abcd");
    auto b = random_string(gen, 200, "abcd");
    a += std::string(70, 'x');
    b += std::string(70, 'y');
    CHECK(levenshtein(a, b) == testing::reference_levenshtein(a, b));
  }
  // Exactly 64 characters is still bit-parallel.
  const std::string a(64, 'a'), b = std::string(63, 'a') + "b";
  CHECK(levenshtein_bitparallel(a, b) == 1);
  CHECK(levenshtein_bitparallel(a, std::string(100, 'a')) == 36);
}

TEST_CASE("mask preview examples") {
  CHECK(mask_preview("amsterdam", "am5terDam&#") == "**5***D**&#");
  CHECK(mask_preview("abcd1234", "abcd1239") == "*******9");
  CHECK(mask_preview("abc1", "abc") == "***");
  CHECK(mask_preview("abc1", "xabc1") == "x****");
}

TEST_CASE("edit scripts are minimal and reproduce the target") {
  std::mt19937_64 gen(1234);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_string(gen, 16, "ab12!");
    const auto b = random_string(gen, 16, "ab12!");
    const auto ops = edit_script(a, b);
    std::size_t cost = 0, visible = 0;
    for (EditOp op : ops) {
      cost += op != EditOp::match;
      visible += op == EditOp::substitute || op == EditOp::insert;
    }
    REQUIRE(cost == testing::reference_levenshtein(a, b));
    REQUIRE(apply(ops, a, b) == b);

    const auto mask = mask_preview(a, b);
    REQUIRE(mask.size() == b.size());
    std::size_t shown = 0;
    for (std::size_t k = 0; k < mask.size(); ++k) {
      if (mask[k] != '*') {
        ++shown;
        CHECK(mask[k] == b[k]);
      }
    }
    // A literal '*' in the target can hide a change, never add one.
    CHECK(shown <= visible);
    if (b.find('*') == std::string::npos) CHECK(shown == visible);
  }
}
