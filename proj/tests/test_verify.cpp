#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "offord/bounds.hpp"
#include "offord/canonical.hpp"
#include "offord/error.hpp"
#include "offord/verify.hpp"

using namespace offord;

namespace {

std::set<std::string> set_of(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("fractions and parts") {
  CHECK(Fraction{18, 32}.reduced().to_string() == "9/16");
  CHECK(Fraction{1, 2} == Fraction{8, 16});
  CHECK(parse_lemma_part("iii") == LemmaPart::III);
  CHECK(parse_lemma_part("5") == LemmaPart::V);
  CHECK_THROWS_AS(parse_lemma_part("vi"), PreconditionError);
  auto s = lemma_scope(LemmaPart::II);
  CHECK(s.rows == 2);
  CHECK(s.strict);
  CHECK(s.ratio == Fraction{5, 8});
}

TEST_CASE("part iii") {
  auto r = verify_lemma_comput(LemmaPart::III);
  CHECK(r.verdict() == "pass");
  CHECK(r.complete);
  CHECK(r.candidates == 76);
  CHECK(r.excluded == 44);
  CHECK(r.max_ratio == Fraction{9, 16});
  CHECK(r.equality_count == 12);
  for (const auto& w : r.equality_witnesses) {
    CHECK(w.omega * 16 == 9 * (std::uint64_t{1} << w.matrix.cols()));
  }
}

TEST_CASE("part iii needs its exclusion") {
  VerifyOptions o;
  o.disable_exclusion = true;
  auto r = verify_lemma_comput(LemmaPart::III, o);
  CHECK(r.verdict() == "fail");
  CHECK(r.violations.size() == 6);
  bool a1 = false;
  for (const auto& w : r.violations) {
    if (w.matrix.cols() == 4 && w.omega == 10 && equivalent(w.matrix, template_a1(2, -1))) a1 = true;
  }
  CHECK(a1);
}

TEST_CASE("parts i, ii and v") {
  auto i = verify_lemma_comput(LemmaPart::I);
  CHECK(i.verdict() == "pass");
  CHECK(i.candidates == 8204);
  CHECK(i.max_ratio == Fraction{15, 32});

  auto ii = verify_lemma_comput(LemmaPart::II);
  CHECK(ii.verdict() == "pass");
  CHECK(ii.candidates == 1522);
  CHECK(ii.max_ratio == Fraction{9, 16});

  auto v = verify_lemma_comput(LemmaPart::V);
  CHECK(v.verdict() == "pass");
  CHECK(v.candidates == 4622);
  CHECK(v.excluded == 158);
  CHECK(v.max_ratio == Fraction{1, 2});
  CHECK(v.equality_count == 55);
}

TEST_CASE("budget and restriction give partial reports") {
  VerifyOptions o;
  o.budget = std::chrono::milliseconds(50);
  auto r = verify_lemma_comput(LemmaPart::IV, o);
  CHECK(r.verdict() == "partial");
  CHECK(r.budget_exhausted);
  CHECK_FALSE(r.complete);
  CHECK(r.units_done < r.units_total);
  CHECK(to_json(r)["budgetExhausted"] == true);
}

TEST_CASE("witness limit") {
  VerifyOptions o;
  o.witness_limit = 3;
  auto r = verify_lemma_comput(LemmaPart::V, o);
  CHECK(r.equality_witnesses.size() == 3);
  CHECK(r.equality_count == 55);
}

TEST_CASE("k x l sweeps against the brute-force table") {
  struct Row {
    int k, l;
    std::uint64_t candidates, max, equality;
  };
  const Row table[] = {
      {1, 1, 0, 0, 0},       {1, 2, 3, 3, 2},     {1, 3, 7, 6, 3},       {1, 4, 12, 12, 3},
      {1, 5, 18, 24, 3},     {1, 6, 25, 48, 3},   {2, 2, 4, 2, 2},       {2, 3, 43, 5, 7},
      {2, 4, 184, 10, 10},   {2, 5, 553, 20, 10}, {2, 6, 1386, 40, 10},  {3, 2, 3, 1, 0},
      {3, 3, 223, 4, 20},    {3, 4, 3062, 9, 9},  {3, 5, 23883, 18, 12}, {3, 6, 140255, 36, 12},
  };
  for (const auto& row : table) {
    CAPTURE(row.k);
    CAPTURE(row.l);
    auto r = verify_main_theorem(row.k, row.l);
    CHECK(r.verdict() == "pass");
    CHECK(r.candidates == row.candidates);
    CHECK(r.equality_count == row.equality);
    if (row.candidates) {
      REQUIRE(r.max_witness);
      CHECK(r.max_witness->omega == row.max);
      CHECK(row.max <= lo_bound(row.k, row.l).value);
    }
    for (const auto& w : r.equality_witnesses) CHECK(w.omega == lo_bound(row.k, row.l).value);
  }
}

TEST_CASE("equality classes of the k x l sweeps") {
  CHECK(set_of(verify_main_theorem(1, 2).equality_classes) == std::set<std::string>{"A3", "A4"});
  CHECK(set_of(verify_main_theorem(1, 3).equality_classes) == std::set<std::string>{"A1", "A3", "A4"});
  CHECK(set_of(verify_main_theorem(2, 3).equality_classes) == std::set<std::string>{"A1", "A2", "A3", "A4"});
  CHECK(verify_main_theorem(3, 3).max_witness->omega <= 4);
  CHECK_THROWS_AS(verify_main_theorem(4, 5), CapacityError);
  CHECK_THROWS_AS(verify_main_theorem(2, 7), CapacityError);
}

TEST_CASE("reports do not depend on the thread count") {
  VerifyOptions one, four;
  four.threads = 4;
  CHECK(to_json(verify_lemma_comput(LemmaPart::V, one), false).dump() ==
        to_json(verify_lemma_comput(LemmaPart::V, four), false).dump());
  CHECK(to_json(verify_main_theorem(3, 5, one), false).dump() ==
        to_json(verify_main_theorem(3, 5, four), false).dump());
}

TEST_CASE("report json") {
  auto j = to_json(verify_main_theorem(1, 2));
  CHECK(j["verdict"] == "pass");
  CHECK(j["candidates"] == 3);
  CHECK(j["maxOmega"]["omega"] == 3);
  CHECK(j.contains("elapsedMs"));
  CHECK_FALSE(to_json(verify_main_theorem(1, 2), false).contains("elapsedMs"));
}
