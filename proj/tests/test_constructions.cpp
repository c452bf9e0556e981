#include <catch_amalgamated.hpp>

#include "sumdiff/constructions.hpp"
#include "sumdiff/io.hpp"
#include "sumdiff/search.hpp"

using namespace sumdiff;

TEST_CASE("multi-dimensional progressions") {
  CHECK(MultiDimAP::point(4).expand() == IntegerSet{4});
  const MultiDimAP ap{1, {2, 10}, {0, 1}, {3, 2}};
  CHECK(ap.dimension() == 2);
  CHECK(ap.expand() == IntegerSet{11, 13, 15, 21, 23, 25});
  CHECK_THROWS_AS((MultiDimAP{0, {1}, {0}, {0}}.expand()), precondition_error);
  CHECK_THROWS_AS((MultiDimAP{0, {1, 1}, {0, 0}, {1 << 20, 1 << 20}}.expand()), resource_limit_error);
}

TEST_CASE("interval minus a point") {
  CHECK(interval_minus_point(19, 16) == without_element(IntegerSet::interval(0, 18), 16));
  const IntegerSet b = interval_minus_point(5, 2, Checks::on);
  CHECK(b == IntegerSet{0, 1, 3, 4});
  CHECK(oracle_sums(b) == IntegerSet::interval(0, 8).vector());
  CHECK(oracle_diffs(b) == IntegerSet::interval(-4, 4).vector());
  CHECK_THROWS_AS(interval_minus_point(5, 4), precondition_error);
  CHECK_THROWS_AS(interval_minus_point(4, 2), precondition_error);
  CHECK_THROWS_AS(interval_minus_point(3, 1), precondition_error);
}

TEST_CASE("interval minus a point: hull identities for every m, r") {
  int failures = 0;
  for (std::int64_t m = 4; m <= 60; ++m) {
    for (std::int64_t r = 2; r <= m - 3; ++r) {
      const IntegerSet b = interval_minus_point(m, r, Checks::on);
      if (oracle_sums(b) != IntegerSet::interval(0, 2 * m - 2).vector()) ++failures;
      if (oracle_diffs(b) != IntegerSet::interval(-(m - 1), m - 1).vector()) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("symmetric set plus a point, worked example") {
  SymmetricPlusPointParams p{19, interval_minus_point(19, 16), MultiDimAP::point(16), 2};
  const SymmetricPlusPoint s = symmetric_plus_point_mstd(p, Checks::on);
  CHECK(s.l == IntegerSet{22, 41});
  CHECK(s.a_star == 63);
  const SetProfile prof = oracle_profile(s.set);
  CHECK(prof.sum_count == 126);
  CHECK(prof.diff_count == 125);
  CHECK(prof.cardinality == 39);
  CHECK(prof.diameter == 63);
}

TEST_CASE("symmetric set plus a point, small example") {
  SymmetricPlusPointParams p{5, IntegerSet{0, 1, 3, 4}, MultiDimAP::point(2), 2};
  const SymmetricPlusPoint s = symmetric_plus_point_mstd(p, Checks::on);
  // a* = (k+3)m - min L* - max L*
  CHECK(s.a_star == 5 * 5 - 2 - 2);
  CHECK(s.set == IntegerSet{0, 1, 3, 4, 5, 8, 13, 17, 18, 20, 21});
  CHECK(oracle_profile(s.set).classification == Classification::mstd);
}

TEST_CASE("symmetric set plus a point rejects bad hypotheses") {
  SymmetricPlusPointParams p{19, interval_minus_point(19, 16), MultiDimAP::point(16), 1};
  try {
    (void)symmetric_plus_point_mstd(p);
    FAIL("expected precondition_error");
  } catch (const precondition_error& e) {
    CHECK(e.clause() == "k >= 2");
  }
  p.k = 2;
  p.lstar = MultiDimAP::point(15);
  CHECK_THROWS_AS(symmetric_plus_point_mstd(p), precondition_error);  // 15 is in B
  p.b = IntegerSet::interval(0, 18);
  p.lstar = MultiDimAP::point(16);
  CHECK_THROWS_AS(symmetric_plus_point_mstd(p), precondition_error);  // B is not missing 16
}

TEST_CASE("interval plus a point") {
  const IntervalPlusPoint a = mdts_interval_plus_point(14, 17, Checks::on);
  const SetProfile p = oracle_profile(a.set);
  CHECK(p.sum_count == 33);
  CHECK(p.diff_count == 35);
  CHECK(a.surplus == 2);

  const IntervalPlusPoint b = mdts_interval_plus_point(2, 10, Checks::on);
  CHECK(b.surplus == 2);
  CHECK(oracle_profile(b.set).sum_count == 9);
  CHECK(oracle_profile(b.set).diff_count == 11);

  const IntervalPlusPoint c = mdts_interval_plus_point(1, 3, Checks::on);
  CHECK(c.set == IntegerSet{0, 1, 3});
  CHECK(c.surplus == 1);
  const SetProfile pc = oracle_profile(c.set);
  CHECK(pc.diff_count - pc.sum_count == 1);

  CHECK_THROWS_AS(mdts_interval_plus_point(5, 6), precondition_error);
  CHECK_THROWS_AS(mdts_interval_plus_point(0, 6), precondition_error);
}

TEST_CASE("interval plus a point: surplus formula for every m, p") {
  int failures = 0;
  for (std::int64_t m = 1; m <= 40; ++m) {
    for (std::int64_t p = m + 2; p <= 3 * m + 10; ++p) {
      const IntervalPlusPoint a = mdts_interval_plus_point(m, p, Checks::on);
      const SetProfile prof = oracle_profile(a.set);
      if (prof.diff_count - prof.sum_count != a.surplus) ++failures;
      if (prof.classification != Classification::mdts) ++failures;
    }
  }
  CHECK(failures == 0);
}

namespace {

PaddedExtensionParams fill2_padding(std::int64_t k) {
  PaddedExtensionParams p;
  p.left = IntegerSet{1, 3, 4, 8, 9};
  p.right = IntegerSet{12, 13, 15, 18, 19, 20};
  p.n = 10;
  p.k = k;
  p.m = 1;
  return p;
}

}  // namespace

TEST_CASE("padded extension") {
  const IntegerSet a = padded_extension(fill2_padding(10), Checks::on);
  IntegerSet a3{-10, -8, -7, -3, -2};
  a3 = set_union(a3, without_element(IntegerSet::interval(0, 20), 10));
  a3 = set_union(a3, IntegerSet{22, 23, 25, 28, 29, 30});
  CHECK(a == translate(a3, 11));

  CHECK_THROWS_AS(padded_extension(fill2_padding(9)), precondition_error);

  const IntegerSet wide = padded_extension(fill2_padding(20), Checks::on);
  CHECK(oracle_profile(wide).classification == Classification::mstd);

  PaddedExtensionParams bad = fill2_padding(10);
  bad.left = IntegerSet{3, 4, 8, 9};
  CHECK_THROWS_AS(padded_extension(bad), precondition_error);
  bad = fill2_padding(10);
  bad.m = 3;
  bad.middle = IntegerSet{21};  // n+k+1
  CHECK_THROWS_AS(padded_extension(bad), precondition_error);
}

TEST_CASE("explicit non-filling family") {
  CHECK(nonfill_explicit_mstd(1) == IntegerSet{0, 1, 2, 5, 8, 9, 10, 14, 15, 17, 18});
  const std::int64_t expect[3][4] = {{36, 35, 11, 18}, {52, 51, 15, 26}, {68, 67, 19, 34}};
  for (std::int64_t l = 1; l <= 3; ++l) {
    const SetProfile p = oracle_profile(nonfill_explicit_mstd(l, Checks::on));
    CHECK(p.sum_count == expect[l - 1][0]);
    CHECK(p.diff_count == expect[l - 1][1]);
    CHECK(p.cardinality == expect[l - 1][2]);
    CHECK(p.diameter == expect[l - 1][3]);
  }
  const std::int64_t even[3][4] = {{40, 41, 12, 22}, {56, 57, 16, 30}, {72, 73, 20, 38}};
  for (std::int64_t l = 1; l <= 3; ++l) {
    const IntegerSet a = nonfill_explicit_mdts(l, Checks::on);
    CHECK(a == with_element(nonfill_explicit_mstd(l), 8 * l + 14));
    const SetProfile p = oracle_profile(a);
    CHECK(p.sum_count == even[l - 1][0]);
    CHECK(p.diff_count == even[l - 1][1]);
    CHECK(p.cardinality == even[l - 1][2]);
    CHECK(p.diameter == even[l - 1][3]);
  }
  CHECK_THROWS_AS(nonfill_explicit_mstd(0), precondition_error);
  CHECK_THROWS_AS(nonfill_explicit_mdts(0), precondition_error);
}

TEST_CASE("explicit non-filling identities for l up to 50") {
  int failures = 0;
  for (std::int64_t l = 1; l <= 50; ++l) {
    const IntegerSet odd = nonfill_explicit_mstd(l);
    const IntegerSet sums(oracle_sums(odd));
    const IntegerSet diffs(oracle_diffs(odd));
    if (sums != without_element(IntegerSet::interval(0, 16 * l + 20), 21)) ++failures;
    const IntegerSet want =
        without_element(without_element(IntegerSet::interval(-8 * l - 10, 8 * l + 10), 8 * l + 3), -8 * l - 3);
    if (diffs != want) ++failures;

    const IntegerSet even = nonfill_explicit_mdts(l);
    const IntegerSet new_sums = set_difference(IntegerSet(oracle_sums(even)), sums);
    const IntegerSet new_diffs = set_difference(IntegerSet(oracle_diffs(even)), diffs);
    if (new_sums != IntegerSet{16 * l + 21, 16 * l + 23, 16 * l + 24, 16 * l + 28}) ++failures;
    if (new_diffs != IntegerSet{-8 * l - 14, -8 * l - 13, -8 * l - 12, 8 * l + 12, 8 * l + 13, 8 * l + 14}) {
      ++failures;
    }
    const SetProfile p = oracle_profile(even);
    if (p.sum_count != 16 * l + 24 || p.diff_count != 16 * l + 25) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("fringe conditions") {
  const IntegerSet l7{0, 1, 3, 7};
  const IntegerSet r7{0, 1, 2, 4, 7};
  CHECK(check_fringe_conditions(l7, r7, 7, ConditionMode::generalized).passed);
  const FringeCheck strict = check_fringe_conditions(l7, r7, 7, ConditionMode::strict);
  CHECK_FALSE(strict.passed);
  CHECK(strict.missing_left_left == std::vector<std::int64_t>{5});
  CHECK(IntegerSet(oracle_sums(l7)) == IntegerSet{0, 1, 2, 3, 4, 6, 7, 8, 10, 14});

  const FringeCheck ok = check_fringe_conditions({0, 1, 2, 5, 8}, {0, 1, 3, 4, 8}, 8, ConditionMode::strict);
  CHECK(ok.passed);
  CHECK(ok.missing_left_right == std::vector<std::int64_t>{7});
  CHECK(ok.missing_left_left.empty());
  CHECK(ok.missing_right_right.empty());

  CHECK_THROWS_AS(check_fringe_conditions({0, 9}, {0, 8}, 8, ConditionMode::strict), precondition_error);
}

TEST_CASE("fringe base") {
  const IntegerSet a = fringe_base({0, 1, 2, 5, 8}, {0, 1, 3, 4, 8}, 8, 10, ConditionMode::strict);
  CHECK(a == nonfill_explicit_mstd(1));
  CHECK(oracle_profile(a).classification == Classification::mstd);

  const IntegerSet b = fringe_base({0, 1, 3, 7}, {0, 1, 2, 4, 7}, 7, 8, ConditionMode::generalized);
  CHECK(b == IntegerSet{0, 1, 3, 7, 8, 11, 13, 14, 15});
  CHECK(oracle_profile(b).classification == Classification::mstd);

  CHECK_THROWS_AS(fringe_base({0, 1, 2, 5, 8}, {0, 1, 3, 4, 8}, 8, 7, ConditionMode::strict), precondition_error);
  CHECK_THROWS_AS(fringe_base({0, 1, 3, 7}, {0, 1, 2, 4, 7}, 7, 8, ConditionMode::strict), precondition_error);
}

TEST_CASE("fringe odd steps match the explicit family") {
  for (std::int64_t k = 0; k <= 4; ++k) {
    const IntegerSet a = fringe_mstd({0, 1, 2, 5, 8}, {0, 1, 3, 4, 8}, 8, 10, k, ConditionMode::strict, Checks::on);
    CHECK(a == nonfill_explicit_mstd(k + 1));
  }
}

TEST_CASE("construction bundles round-trip through JSON") {
  const std::vector<ConstructionRequest> requests{
      IntervalMinusPointRequest{19, 16},
      SymmetricPlusPointParams{5, IntegerSet{0, 1, 3, 4}, MultiDimAP::point(2), 2},
      IntervalPlusPointRequest{14, 17},
      fill2_padding(10),
      NonfillRequest{2, true},
      FringeBaseRequest{{0, 1, 3, 7}, {0, 1, 2, 4, 7}, 7, 8, ConditionMode::generalized},
  };
  for (const auto& req : requests) {
    const json j = request_to_json(req);
    const ConstructionRequest back = request_from_json(j);
    CHECK(request_to_json(back) == j);
    CHECK(build(back) == build(req));
  }
  CHECK(build(request_from_json(json::parse(R"({"theorem":"interval_plus_point","m":14,"p":17})"))) ==
        with_element(IntegerSet::interval(0, 14), 17));
  CHECK_THROWS(request_from_json(json::parse(R"({"theorem":"nope"})")));
}
