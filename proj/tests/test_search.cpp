#include <catch_amalgamated.hpp>

#include <random>

#include "sumdiff/chains.hpp"
#include "sumdiff/io.hpp"
#include "sumdiff/search.hpp"

using namespace sumdiff;

namespace {

const IntegerSet kConway{0, 2, 3, 4, 7, 11, 12, 14};

bool contains_set(const std::vector<IntegerSet>& sets, const IntegerSet& a) {
  return std::find(sets.begin(), sets.end(), a) != sets.end();
}

}  // namespace

TEST_CASE("oracle examples") {
  const SetProfile c = oracle_profile(kConway);
  CHECK(c.sum_count == 26);
  CHECK(c.diff_count == 25);
  CHECK(c.classification == Classification::mstd);
  const SetProfile t = oracle_profile({1, 2, 3});
  CHECK(t.sum_count == 5);
  CHECK(t.diff_count == 5);
  CHECK(t.classification == Classification::balanced);
  CHECK_THROWS_AS(oracle_profile(IntegerSet::interval(0, 10000)), resource_limit_error);
  CHECK_THROWS_AS(oracle_profile(IntegerSet{}), precondition_error);
}

TEST_CASE("oracle agrees with the core on random sets") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(1, 64);
  std::uniform_int_distribution<std::int64_t> value(-500, 500);
  for (int i = 0; i < 10000; ++i) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(size(rng)));
    for (auto& x : v) x = value(rng);
    const IntegerSet a(std::move(v));
    const SetProfile core = profile(a);
    CHECK(oracle_profile(a) == core);
    if (i % 50 == 0) CHECK(oracle_profile_by_runs(a) == core);
  }
}

TEST_CASE("run oracle handles wide sets") {
  const ChainRecord c = fill1_chain(kConway, 13);
  const IntegerSet& big = c.steps.back().set;
  REQUIRE(big.size() > kOracleMaxSize);
  const OracleResult r = independent_profile(big);
  CHECK(r.route == OracleRoute::runs);
  CHECK(r.profile == c.steps.back().profile);
  CHECK(independent_profile(kConway).route == OracleRoute::pairs);
}

TEST_CASE("small mask sums and differences") {
  const std::uint32_t conway = 0b101100010011101;  // bits 0,2,3,4,7,11,12,14
  CHECK(detail::mask_to_set(conway) == kConway);
  const auto [s, d] = detail::small_sums_diffs(conway);
  CHECK(std::popcount(s) == 26);
  CHECK(std::popcount(d) == 25);
  CHECK(detail::mask_to_set(s) == sumset(kConway));
  CHECK(translate(detail::mask_to_set(d), -31) == diffset(kConway));
}

TEST_CASE("exhaustive search by diameter") {
  const SearchReport small = exhaustive_by_diameter(3);
  CHECK(small.mstd_count == 0);
  CHECK(small.total == 1 + 1 + 2 + 4);
  CHECK(small.mdts_count + small.balanced_count == small.total);

  const SearchReport r13 = exhaustive_by_diameter(13);
  CHECK(r13.mstd_count == 0);
  CHECK_FALSE(r13.min_mstd_diameter.has_value());
  std::uint64_t total = 0;
  for (const auto& row : r13.by_diameter) {
    CHECK(row.mstd == 0);
    CHECK(row.mstd + row.mdts + row.balanced == row.total);
    total += row.total;
  }
  CHECK(total == r13.total);
  CHECK(r13.total == std::uint64_t{1} << 13);

  const SearchReport r14 = exhaustive_by_diameter(14);
  CHECK(r14.mstd_count >= 1);
  CHECK(r14.min_mstd_diameter == 14);
  CHECK(contains_set(r14.min_diameter_witnesses, kConway));
  for (const IntegerSet& w : r14.min_diameter_witnesses) CHECK(oracle_profile(w).classification == Classification::mstd);
  CHECK(r14.min_mstd_cardinality == 8);
  CHECK(r14.mstd_count + r14.mdts_count + r14.balanced_count == r14.total);

  CHECK_THROWS_AS(exhaustive_by_diameter(27), resource_limit_error);
}

TEST_CASE("exhaustive search is independent of the worker count") {
  SearchOptions four;
  four.workers = 4;
  CHECK(exhaustive_by_diameter(15, four) == exhaustive_by_diameter(15));
}

TEST_CASE("bounded cardinality scan") {
  const SearchReport r = min_cardinality_scan(24, 7);
  CHECK(r.mstd_count == 0);
  CHECK(r.mstd_count + r.mdts_count + r.balanced_count == r.total);

  const SearchReport conway = min_cardinality_scan(14, 8);
  CHECK(conway.mstd_count >= 1);
  CHECK(contains_set(conway.min_cardinality_witnesses, kConway));

  const SearchReport tiny = min_cardinality_scan(5, 3);
  CHECK(tiny.mstd_count == 0);

  CHECK_THROWS_AS(min_cardinality_scan(63, 30), resource_limit_error);
  CHECK_THROWS_AS(min_cardinality_scan(14, 8, {}, 100), resource_limit_error);
}

TEST_CASE("scan and exhaustive search agree where they overlap") {
  const SearchReport a = min_cardinality_scan(14, 15);
  const SearchReport b = exhaustive_by_diameter(14);
  CHECK(a.total == b.total);
  CHECK(a.mstd_count == b.mstd_count);
  CHECK(a.mdts_count == b.mdts_count);
}

TEST_CASE("sampling") {
  const SearchReport r = sample_mstd_proportion(30, 100000, 42);
  REQUIRE(r.mstd_fraction.has_value());
  CHECK(*r.mstd_fraction > 0.0);
  CHECK(*r.ci_low > 0.0);
  CHECK(*r.ci_low <= *r.mstd_fraction);
  CHECK(*r.mstd_fraction <= *r.ci_high);
  CHECK(r.mstd_count + r.mdts_count + r.balanced_count == r.total);
  CHECK(r.seed == 42u);

  const SearchReport none = sample_mstd_proportion(5, 1000, 1);
  CHECK(none.mstd_count == 0);
  CHECK(*none.mstd_fraction == 0.0);

  CHECK(sample_mstd_proportion(30, 5000, 7) == sample_mstd_proportion(30, 5000, 7));
  CHECK_FALSE(sample_mstd_proportion(30, 5000, 7) == sample_mstd_proportion(30, 5000, 8));
  SearchOptions three;
  three.workers = 3;
  CHECK(sample_mstd_proportion(30, 5000, 7, three) == sample_mstd_proportion(30, 5000, 7));
  CHECK(search_to_json(sample_mstd_proportion(40, 3000, 9, three)).dump() ==
        search_to_json(sample_mstd_proportion(40, 3000, 9)).dump());
  CHECK_THROWS_AS(sample_mstd_proportion(0, 10, 1), precondition_error);
  CHECK_THROWS_AS(sample_mstd_proportion(10, 0, 1), precondition_error);
}

TEST_CASE("derived seeds and the Wilson interval") {
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  CHECK(derive_seed(42, 0) != derive_seed(43, 0));
  CHECK(derive_seed(42, 5) == derive_seed(42, 5));
  const auto [lo, hi] = wilson_interval(0, 100);
  CHECK(lo == 0.0);
  CHECK(hi == Catch::Approx(0.0370).epsilon(0.01));
  const auto [lo2, hi2] = wilson_interval(50, 100);
  CHECK(lo2 == Catch::Approx(0.4038).epsilon(0.001));
  CHECK(hi2 == Catch::Approx(0.5962).epsilon(0.001));
}

TEST_CASE("FILL2 seeds") {
  const auto seeds = find_fill2_seeds(10);
  CHECK(std::find(seeds.begin(), seeds.end(),
                  SplitSeed{IntegerSet{1, 3, 4, 8, 9}, IntegerSet{12, 13, 15, 18, 19, 20}}) != seeds.end());
  for (const SplitSeed& s : seeds) {
    const IntegerSet a = set_union(s.left, s.right);
    REQUIRE(is_pn(a, 10));
    REQUIRE(oracle_profile(a).classification == Classification::mstd);
    CHECK_NOTHROW(fill2_chain(s.left, s.right, 10, 3));
  }
  CHECK(find_fill2_seeds(3).empty());
  CHECK_THROWS_AS(find_fill2_seeds(13), resource_limit_error);
}

TEST_CASE("FILL2 seeds agree with a direct filter") {
  const std::int64_t n = 8;
  std::size_t expected = 0;
  for (std::uint32_t bits = 0; bits < (1u << (2 * n + 1)); ++bits) {
    if (!(bits >> 1 & 1u) || !(bits >> (2 * n) & 1u) || (bits >> n & 1u) || (bits & 1u)) continue;
    const IntegerSet a = detail::mask_to_set(bits);
    if (is_pn(a, n) && classify(a) == Classification::mstd) ++expected;
  }
  CHECK(find_fill2_seeds(n).size() == expected);
}

TEST_CASE("search reports serialize") {
  const json j = search_to_json(exhaustive_by_diameter(14));
  CHECK(j.at("kind") == "diameter");
  CHECK(j.at("min_mstd_diameter") == 14);
  bool found = false;
  for (const auto& w : j.at("min_diameter_witnesses")) found = found || w == "0,2,3,4,7,11,12,14";
  CHECK(found);
}
