#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dpar/error.hpp"
#include "dpar/strength.hpp"
#include "support.hpp"

using namespace dpar;

namespace {

// Rank with inclusive ties over the explicit support, straight from the
// definition: how many combinations are at least as probable.
double oracle_rank(const std::vector<double>& support, double log2p) {
  const auto n = std::count_if(support.begin(), support.end(),
                               [&](double s) { return s >= log2p - 1e-9; });
  return std::max<double>(1.0, static_cast<double>(n));
}

Model uniform_model(std::size_t base_keys) {
  return testing::model_from_counts(
      {std::vector<std::uint64_t>{1}, {1}, std::vector<std::uint64_t>(base_keys, 1), {1}, {1}});
}

}  // namespace

TEST_CASE("category boundaries are inclusive upper bounds") {
  CHECK(categorize(0.0) == Category::weak);
  CHECK(categorize(29.0) == Category::weak);
  CHECK(categorize(29.01) == Category::fair);
  CHECK(categorize(37.0) == Category::fair);
  CHECK(categorize(37.01) == Category::strong);
  CHECK(categorize(30.0, {31.0, 40.0}) == Category::weak);
  CHECK(to_string(Category::fair) == "fair");
}

TEST_CASE("crack time") {
  auto t = crack_time(29.0);
  CHECK(t.seconds == doctest::Approx(std::exp2(29.0) / 3.6e6));
  CHECK(t.seconds == doctest::Approx(149.1).epsilon(0.01));
  CHECK(t.human == "3 minutes");
  t = crack_time(std::log2(305419.9 * 3.6e6));
  CHECK(t.human == "4 days");
  CHECK(crack_time(1.0).human == "less than a second");
  CHECK(crack_time(std::log2(3.6e6)).human == "1 second");
  CHECK(crack_time(std::log2(3600.0 * 3.6e6)).human == "1 hour");
  CHECK(crack_time(std::log2(3601.0 * 3.6e6)).human == "2 hours");
  CHECK(crack_time(100.0).human == "more than a million years");
  CHECK(crack_time(10.0, 1.0).seconds == doctest::Approx(1024.0));
  CHECK_THROWS_AS(crack_time(10.0, 0.0), ContractError);
}

TEST_CASE("analytic per-dimension scores") {
  std::istringstream corpus("!1P@ssw0rD2#\t3\npassword1\n");
  const auto model = train(corpus, L33tTable::default_table()).model;
  const auto parts = decompose("!1P@ssw0rD2#", L33tTable::default_table(), &model);
  const auto s = score_parts(model, parts, L33tTable::default_table());
  CHECK(s[Dimension::prefix] == doctest::Approx(std::log2(0.75)));
  CHECK(s[Dimension::base] == doctest::Approx(0.0));
  CHECK(s[Dimension::l33t] == doctest::Approx(std::log2(0.75)));
  CHECK(s.total() == doctest::Approx(4 * std::log2(0.75)));

  const auto unseen = decompose("zzz77", L33tTable::default_table(), &model);
  CHECK(score_parts(model, unseen, L33tTable::default_table())[Dimension::base] ==
        doctest::Approx(std::log2(1.0 / 8.0)));
}

TEST_CASE("uniform 1024-way base gives about ten bits") {
  // 1023 observed keys plus the pseudo-key of probability 1/2046: a key at
  // p = 1/1023 ranks among the 1023 equally likely ones.
  const auto model = uniform_model(1023);
  RankEstimator est(model);
  const double lp = model.table(Dimension::base).log2p("k2_0") + 4 * std::log2(1.0);
  CHECK(std::abs(est.rank_bits(lp) - std::log2(1023.0)) < 0.01);
  CHECK(exact_rank(model, lp) == 1023.0);
}

TEST_CASE("estimated rank follows the exact rank on a small model") {
  const auto model = testing::model_from_counts(
      {std::vector<std::uint64_t>{5, 3, 1}, {4, 4, 2, 1}, {9, 7, 3, 2, 2, 1, 1}, {3, 1}, {6, 1}});
  const auto support = testing::enumerate_support(model);
  RankEstimator est(model);
  CHECK(est.total_combinations() == doctest::Approx(static_cast<double>(support.size())));
  for (double s : support) {
    const double exact = exact_rank(model, s);
    CHECK(exact == oracle_rank(support, s));
    CHECK(std::abs(est.rank_bits(s) - std::log2(exact)) <= 1.0);
  }
}

TEST_CASE("rank is monotone and never below one") {
  const auto model = testing::model_from_counts(
      {std::vector<std::uint64_t>{5, 3, 1}, {4, 4, 2, 1}, {9, 7, 3}, {3, 1}, {6, 1}});
  RankEstimator est(model);
  double prev = 0.0;
  for (double lp = 0.0; lp > -60.0; lp -= 0.37) {
    const double b = est.rank_bits(lp);
    CHECK(b >= 0.0);
    CHECK(b >= prev);
    prev = b;
  }
  CHECK(est.rank(1.0) == 1.0);
  CHECK(est.rank(-1000.0) == doctest::Approx(est.total_combinations()));
}

TEST_CASE("all backends give the same rank") {
  const auto model = uniform_model(300);
  RankEstimator ref(model, simd::Backend::scalar);
  for (simd::Backend b : {simd::Backend::avx2, simd::Backend::neon}) {
    if (!simd::backend_available(b)) continue;
    RankEstimator other(model, b);
    CHECK(std::equal(ref.mass().begin(), ref.mass().end(), other.mass().begin(),
                     other.mass().end()));
  }
}

TEST_CASE("exact rank refuses oversized models") {
  // 301^3 * 4 combinations with the pseudo-keys.
  const auto model = testing::model_from_counts({std::vector<std::uint64_t>(300, 1),
                                                 std::vector<std::uint64_t>(300, 1),
                                                 std::vector<std::uint64_t>(300, 1),
                                                 {1},
                                                 {1}});
  CHECK_THROWS_AS(exact_rank(model, -10.0), ContractError);
}

TEST_CASE("scorer report") {
  std::istringstream corpus("password1\t50\nabc123\t20\nP@ssw0rd!\t2\n");
  auto model = std::make_shared<const Model>(train(corpus, L33tTable::default_table()).model);
  const Scorer scorer(model, L33tTable::default_table());
  const auto common = scorer.report(scorer.parse("password1"));
  const auto rare = scorer.report(scorer.parse("Xylophone!77"));
  CHECK(common.bits < rare.bits);
  CHECK(common.category == categorize(common.bits));
  CHECK(common.crack_seconds == doctest::Approx(std::exp2(common.bits) / kDefaultCrackRate));
}

TEST_CASE("ties count inclusively") {
  // Five dimensions with two equally likely keys: all 32 observed
  // combinations tie at 2^-5.
  const auto model = testing::model_from_counts({std::vector<std::uint64_t>{1, 1},
                                                 {1, 1},
                                                 {1, 1},
                                                 {1, 1},
                                                 {1, 1}});
  RankEstimator est(model);
  CHECK(exact_rank(model, -5.0) == 32.0);
  CHECK(est.rank_bits(-5.0) == doctest::Approx(5.0));
  CHECK(model.table(Dimension::base).floor_log2p() == doctest::Approx(-2.0));
}
