#include <doctest.h>

#include <random>

#include "dpar/decomposition.hpp"
#include "dpar/error.hpp"
#include "dpar/l33t.hpp"
#include "dpar/model.hpp"
#include "support.hpp"

using namespace dpar;

namespace {

const L33tTable& table() { return L33tTable::default_table(); }

// Default entries with g->9 swapped for l->1, so '1' reverses to i or l.
L33tTable ambiguous_table() {
  std::vector<L33tEntry> entries(table().entries().begin(), table().entries().end());
  entries.back() = {'l', '1'};
  return L33tTable(std::move(entries));
}

}  // namespace

TEST_CASE("default l33t table has 14 entries over the expected letters") {
  CHECK(table().size() == 14);
  for (const auto& e : table().entries()) {
    CHECK(std::string_view("aeiosxpztg").find(e.letter) != std::string_view::npos);
  }
  CHECK(table().entries_for_letter('a').size() == 2);
  CHECK(table().entries_for_letter('p').empty());
}

TEST_CASE("l33t table file format") {
  const auto t = L33tTable::parse(table().serialize());
  CHECK(t == table());
  CHECK(t.hash_hex() == table().hash_hex());
  CHECK(t.hash_hex().size() == 16);
  CHECK_THROWS_AS(L33tTable::parse("a @\n"), FormatError);
  CHECK_THROWS_AS(L33tTable::parse("A\t@\n"), FormatError);
  CHECK_THROWS_AS(L33tTable::parse("a\tb\n"), FormatError);
  CHECK_THROWS_AS(L33tTable::parse("a\t@\na\t@\n"), FormatError);

  const auto shipped = L33tTable::load(DPAR_SOURCE_DIR "/data/l33t_default.tsv");
  CHECK(shipped == table());
}

TEST_CASE("worked example decomposes into five dimensions") {
  const auto p = decompose("!1P@ssw0rD2#", table());
  CHECK(p.prefix == "!1");
  CHECK(p.suffix == "2#");
  CHECK(p.base_word == "password");
  REQUIRE(p.l33t_subs.size() == 2);
  CHECK(p.l33t_subs[0] == L33tSub{1, '@', 'a'});
  CHECK(p.l33t_subs[1] == L33tSub{5, '0', 'o'});
  CHECK(p.cap_positions == std::vector<std::size_t>{0, 7});
  CHECK(cap_display(p) == std::vector<long>{0, -1});
  CHECK(cap_key(p) == "0,-1");
  CHECK(l33t_key(p, table()) == "@,0");
  CHECK(recompose(p) == "!1P@ssw0rD2#");
}

TEST_CASE("simple shapes") {
  auto p = decompose("password1", table());
  CHECK(p.prefix.empty());
  CHECK(p.suffix == "1");
  CHECK(p.base_word == "password");
  CHECK(p.l33t_subs.empty());
  CHECK(p.cap_positions.empty());

  p = decompose("123456", table());
  CHECK(p.prefix.empty());
  CHECK(p.suffix.empty());
  CHECK(p.base_word == "123456");

  p = decompose("a-b", table());  // '-' has no reverse mapping
  CHECK(p.base_word == "a-b");
  CHECK(p.l33t_subs.empty());

  PasswordParts hello;
  hello.base_word = "hello";
  CHECK(recompose(hello) == "hello");
}

TEST_CASE("ambiguous reverse l33t is resolved by the model") {
  const auto t = ambiguous_table();
  // Without a model the first table entry (i) wins.
  CHECK(decompose("1qaz1qaz", t).base_word == "qaziqaz");

  std::array<DimensionTable, 5> tables;
  tables[index(Dimension::base)].add("qazlqaz", 3);
  tables[index(Dimension::base)].add("other", 1);
  const Model model(std::move(tables), {});

  const auto p = decompose("1qaz1qaz", t, &model);
  CHECK(p.prefix == "1");
  CHECK(p.suffix.empty());
  CHECK(p.base_word == "qazlqaz");
  REQUIRE(p.l33t_subs.size() == 1);
  CHECK(p.l33t_subs[0] == L33tSub{3, '1', 'l'});
  CHECK(recompose(p) == "1qaz1qaz");
  // Pure function of its inputs.
  CHECK(decompose("1qaz1qaz", t, &model) == p);
}

TEST_CASE("recompose rejects conflicting positions") {
  auto p = decompose("P@ssword1", table());
  auto bad = p;
  bad.cap_positions.push_back(1);  // collides with the l33t sub
  CHECK_THROWS_AS(recompose(bad), InvariantError);
  bad = p;
  bad.cap_positions = {42};
  CHECK_THROWS_AS(recompose(bad), InvariantError);
  bad = p;
  bad.l33t_subs.push_back({1, '4', 'a'});
  CHECK_THROWS_AS(recompose(bad), InvariantError);
  bad = p;
  bad.prefix = "x";
  CHECK_THROWS_AS(check_invariants(bad, table()), InvariantError);
}

TEST_CASE("round trip, maximality and case restoration over random passwords") {
  std::mt19937_64 gen(20240611);
  for (int i = 0; i < 20000; ++i) {
    const auto pw = testing::random_policy_valid(gen, 24);
    const auto p = decompose(pw, table());
    REQUIRE(recompose(p) == pw);
    CHECK_NOTHROW(check_invariants(p, table()));
    if (!p.base_word.empty()) {
      const std::string middle = pw.substr(p.prefix.size(), pw.size() - p.prefix.size() - p.suffix.size());
      CHECK(std::isalpha(static_cast<unsigned char>(middle.front())));
      CHECK(std::isalpha(static_cast<unsigned char>(middle.back())));
      // Lowercasing the middle equals the base word with l33t applied.
      std::string lowered = middle;
      for (auto& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      std::string expected = p.base_word;
      for (const auto& s : p.l33t_subs) expected[s.position] = s.symbol;
      CHECK(lowered == expected);
    }
  }
}
