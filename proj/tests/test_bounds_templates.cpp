#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "offord/bounds.hpp"
#include "offord/canonical.hpp"
#include "offord/error.hpp"
#include "offord/omega.hpp"
#include "offord/templates.hpp"

using namespace offord;

TEST_CASE("lo_bound") {
  CHECK(lo_bound(1, 3).value == 6);
  CHECK(lo_bound(2, 5).value == 20);
  CHECK(lo_bound(5, 4).value == 8);
  CHECK(lo_bound(3, 3).value == 4);
  CHECK_THROWS_AS(lo_bound(0, 3), PreconditionError);

  for (int k = 1; k <= 8; ++k) {
    for (int l = 1; l <= 20; ++l) {
      auto v = lo_bound(k, l).value;
      CHECK(lo_bound(k, l + 1).value > v);
      if (k <= l - 1) CHECK(v == (std::uint64_t{1} << (l - 1)) + (std::uint64_t{1} << (l - k - 1)));
    }
  }
}

TEST_CASE("vector_bound") {
  CHECK(vector_bound(2, 2) == 3);
  CHECK(vector_bound(7, 4) == 70);
  CHECK(vector_bound(4, 2) == 10);
  for (int l = 1; l <= 16; ++l) {
    for (int ones = 0; ones <= l; ++ones) CHECK(vector_bound(l, ones) <= vector_bound(l, (l + 1) / 2));
  }
}

TEST_CASE("vector_bound is the exact count for +-1 vectors") {
  for (int l = 1; l <= 10; ++l) {
    for (int ones = 0; ones <= l; ++ones) {
      std::vector<int> v(static_cast<std::size_t>(l), -1);
      std::fill(v.begin(), v.begin() + ones, 1);
      CHECK(omega_count_fast(SignMatrix(1, l, v)) == vector_bound(l, ones));
    }
  }
}

TEST_CASE("cost estimate") {
  auto c = estimate_cost_t7();
  CHECK(c.row_choices == 1267);
  CHECK(c.inner_products == 3035648);
  std::uint64_t rows = 0, inner = 0;
  bool origin = false;
  for (const auto& t : c.breakdown) {
    rows += t.row_choices;
    inner += t.inner_products;
    if (t.i == 0 && t.j == 0 && t.r == 0) {
      origin = true;
      CHECK(t.row_choices == 1);
    }
  }
  CHECK(origin);
  CHECK(rows == c.row_choices);
  CHECK(inner == c.inner_products);
}

TEST_CASE("A1 and A2 attain 2^(k+1)+2") {
  for (int k = 2; k <= 4; ++k) {
    const std::uint64_t want = (std::uint64_t{1} << (k + 1)) + 2;
    for (int b : {0, -1}) CHECK(omega_count_fast(template_a1(k, b)) == want);
    for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
      std::vector<int> a;
      for (int i = 0; i < k - 1; ++i) a.push_back((mask >> i) & 1 ? -1 : 1);
      for (int c : {0, 1}) CHECK(omega_count_fast(template_a2(a, c)) == want);
    }
    CHECK(lo_bound(k, k + 2).value == want);
  }
}

TEST_CASE("A3 and A4 attain 2^k+1") {
  for (int k = 1; k <= 5; ++k) {
    const std::uint64_t want = (std::uint64_t{1} << k) + 1;
    CHECK(omega_count_fast(template_a3(k)) == want);
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i) s.push_back((mask >> i) & 1 ? -1 : 1);
      CHECK(omega_count_fast(template_a4(s)) == want);
    }
    CHECK(lo_bound(k, k + 1).value == want);
  }
}

TEST_CASE("template shapes") {
  CHECK(template_a3(2) == SignMatrix{{1, -1, 0}, {1, 0, -1}});
  CHECK(template_a1(2, -1) == SignMatrix{{1, 1, -1, 0}, {1, 1, 0, -1}});
  std::vector<int> a{1};
  CHECK(template_a2(a, 1) == SignMatrix{{1, -1, 1, 0}, {1, -1, 0, 1}});
  CHECK_THROWS_AS(template_a1(2, 1), PreconditionError);
  CHECK_THROWS_AS(template_a2(a, -1), PreconditionError);
}

TEST_CASE("classify examples") {
  auto c = classify_equality(SignMatrix{{1, 1, -1, 0}, {1, 1, 0, -1}});
  CHECK(c.kind == EqualityKind::A1);
  CHECK(c.b == -1);
  CHECK(c.describe() == "A1 b=-1");

  CHECK(classify_equality(SignMatrix{{1, -1, 0}, {1, 0, -1}}).kind == EqualityKind::A3);
  CHECK(classify_equality(SignMatrix{{1, 1}, {1, -1}}).kind == EqualityKind::None);
  CHECK_THROWS_AS(classify_equality(SignMatrix{{1, 0}, {1, 1}}), PreconditionError);

  // Zero columns of the input are ignored; zero columns of a template too.
  CHECK(classify_equality(SignMatrix{{1, 1, -1, 0, 0}, {1, 1, 0, 0, 0}}).kind == EqualityKind::A1);
  CHECK(classify_equality(SignMatrix{{0, 1, 0, -1}, {0, 1, -1, 0}}).kind == EqualityKind::A3);
}

TEST_CASE("classified matrices attain the bound") {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& t : equality_templates(k)) {
      CAPTURE(t.cls.describe());
      // With one row the templates overlap, so only the class name can differ.
      auto c = classify_equality(t.matrix);
      CHECK(c.kind != EqualityKind::None);
      if (k > 1) CHECK(c.kind == t.cls.kind);
      CHECK(omega_count_fast(t.matrix) == lo_bound(k, t.matrix.cols()).value);
      // Padding with a zero column keeps the class and doubles both sides.
      std::vector<int> e;
      for (int i = 0; i < t.matrix.rows(); ++i) {
        e.insert(e.end(), t.matrix.row(i).begin(), t.matrix.row(i).end());
        e.push_back(0);
      }
      SignMatrix padded(t.matrix.rows(), t.matrix.cols() + 1, e);
      CHECK(classify_equality(padded).kind == c.kind);
      CHECK(omega_count_fast(padded) == lo_bound(k, padded.cols()).value);
    }
  }
}

TEST_CASE("block shapes") {
  auto fam = block_shape_family(2);
  CHECK_FALSE(fam.empty());
  for (const auto& m : fam) {
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 4);
  }
  auto keys = block_shape_keys(2);
  // A1 with b = -1 is one of the k = 2 shapes.
  CHECK(std::find(keys.begin(), keys.end(), canonical_form(template_a1(2, -1))) != keys.end());
  CHECK(std::find(keys.begin(), keys.end(), canonical_form(star(template_a1(2, 0)).matrix)) != keys.end());
  CHECK(block_shape_family(3).front().rows() == 3);
}
