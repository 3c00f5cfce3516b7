#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "offord/canonical.hpp"
#include "offord/error.hpp"
#include "offord/omega.hpp"
#include "oracles.hpp"

using namespace offord;

namespace {

std::vector<std::string> strings(const std::vector<BitVector>& v) {
  std::vector<std::string> out;
  for (const auto& b : v) out.push_back(b.to_string());
  return out;
}

SignMatrix random_sign(std::mt19937_64& rng, int k, int l) {
  std::uniform_int_distribution<int> e(-1, 1);
  std::vector<int> entries(static_cast<std::size_t>(k * l));
  for (auto& x : entries) x = e(rng);
  return SignMatrix(k, l, entries);
}

oracle::Rows rows_of(const SignMatrix& m) {
  oracle::Rows r;
  for (int i = 0; i < m.rows(); ++i) r.emplace_back(m.row(i).begin(), m.row(i).end());
  return r;
}

SignMatrix shuffled(const SignMatrix& m, std::mt19937_64& rng) {
  std::vector<int> rp(static_cast<std::size_t>(m.rows())), cp(static_cast<std::size_t>(m.cols()));
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  return m.select_rows(rp).select_cols(cp);
}

}  // namespace

TEST_CASE("weight") {
  std::vector<int> a{1, -1, 0, 1}, b{2, 0, 0};
  CHECK(weight(a) == 3);
  CHECK(weight(b) == 1);
}

TEST_CASE("star strips zero columns") {
  auto s = star(SignMatrix{{0, 1, 0}, {0, -1, 0}});
  CHECK(s.matrix == SignMatrix{{1}, {-1}});
  CHECK(s.removed == 2);

  s = star(SignMatrix{{1, 1, 0}});
  CHECK(s.matrix == SignMatrix{{1, 1}});
  CHECK(s.removed == 1);
  CHECK(omega_enumerate(SignMatrix{{1, 1, 0}}).count == 6);

  s = star(SignMatrix{{1, 0}, {0, 1}});
  CHECK(s.removed == 0);

  s = star(SignMatrix{{0, 0, 0}});
  CHECK(s.matrix.cols() == 0);
  CHECK(s.removed == 3);
}

TEST_CASE("is_reduced") {
  CHECK(is_reduced(SignMatrix{{1, 1}, {1, -1}}));
  CHECK_FALSE(is_reduced(SignMatrix{{1, 0}, {0, 1}}));
  CHECK_FALSE(is_reduced(SignMatrix{{1, 1, 0}, {1, 1, 0}}));
}

TEST_CASE("normalize_to_reduced") {
  auto n = normalize_to_reduced(SignMatrix{{1, 1}, {1, 1}});
  REQUIRE_FALSE(n.short_circuited());
  CHECK(n.reduced() == SignMatrix{{1, 1}});

  n = normalize_to_reduced(SignMatrix{{0, 1, 0}, {1, 1, 1}});
  REQUIRE_FALSE(n.short_circuited());
  CHECK(n.reduced() == SignMatrix{{1, 1, 1}});

  n = normalize_to_reduced(SignMatrix{{2, 0}, {1, 1}});
  REQUIRE(n.short_circuited());
  CHECK(n.certificate().row == 0);
  CHECK(n.certificate().bound == 2);

  n = normalize_to_reduced(SignMatrix{{0, 1}, {0, 0}});
  REQUIRE_FALSE(n.short_circuited());
  CHECK(n.reduced().rows() == 0);
}

TEST_CASE("normalize keeps omega") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_sign(rng, 1 + trial % 4, 1 + trial % 6);
    auto n = normalize_to_reduced(a);
    auto full = omega_enumerate(a).count;
    if (n.short_circuited()) {
      CHECK(full <= n.certificate().bound);
    } else {
      CHECK((n.reduced().rows() == 0 || is_reduced(n.reduced())));
      CHECK(omega_enumerate(n.reduced()).count == full);
    }
  }
}

TEST_CASE("omega_enumerate examples") {
  auto r = omega_enumerate(SignMatrix{{1, -1}}, true);
  CHECK(r.count == 3);
  CHECK(strings(*r.members) == std::vector<std::string>{"00", "10", "11"});

  r = omega_enumerate(SignMatrix{{1, -1, 1, 0}, {1, 1, 0, -1}}, true);
  CHECK(r.count == 8);
  CHECK(strings(*r.members) ==
        std::vector<std::string>{"0000", "0010", "0110", "0111", "1000", "1001", "1101", "1111"});

  CHECK(omega_enumerate(SignMatrix{{1, 1, -1, 0}, {1, 1, 0, 0}}).count == 10);
  CHECK_FALSE(omega_enumerate(SignMatrix{{1, 1}}).members.has_value());
}

TEST_CASE("omega_count_fast examples") {
  CHECK(omega_count_fast(SignMatrix{{1, -1, 0}, {1, 0, -1}}) == 5);
  CHECK(omega_count_fast(SignMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}}) == 9);
  CHECK_THROWS_AS(omega_count_fast(SignMatrix{{2, 1}}), DomainError);
  CHECK(omega_enumerate(SignMatrix{{2, 1}}).count == 2);
}

TEST_CASE("capacity") {
  CHECK_THROWS_AS(SignMatrix(1, kMaskCap + 1, std::vector<int>(kMaskCap + 1, 1)), CapacityError);
  SignMatrix widest(1, kMaskCap, std::vector<int>(kMaskCap, 1));
  CHECK(widest.plus_mask(0) == low_bits(kMaskCap));
}

TEST_CASE("fast path agrees with the brute-force oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const int l = 1 + static_cast<int>(rng() % 14);
    auto a = random_sign(rng, k, l);
    const auto expect = oracle::omega(rows_of(a), l);
    CHECK(omega_count_fast(a) == expect);
    CHECK(omega_enumerate(a).count == expect);
  }
}

TEST_CASE("members are distinct and counted") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_sign(rng, 2, 6);
    auto r = omega_enumerate(a, true);
    auto s = strings(*r.members);
    CHECK(s.size() == r.count);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
  }
}

TEST_CASE("zero-column law") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_sign(rng, 1 + trial % 3, 1 + trial % 9);
    auto s = star(a);
    CHECK(omega_enumerate(a).count == (std::uint64_t{1} << s.removed) * omega_enumerate(s.matrix).count);
  }
}

TEST_CASE("row intersection") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_sign(rng, 3, 6);
    auto whole = strings(*omega_enumerate(a, true).members);
    std::vector<std::string> meet;
    for (int i = 0; i < a.rows(); ++i) {
      std::vector<int> only{i};
      auto s = strings(*omega_enumerate(a.select_rows(only), true).members);
      if (i == 0) {
        meet = s;
      } else {
        std::vector<std::string> next;
        std::set_intersection(meet.begin(), meet.end(), s.begin(), s.end(), std::back_inserter(next));
        meet = next;
      }
      CHECK(s.size() >= whole.size());
    }
    CHECK(meet == whole);
  }
}

TEST_CASE("non-unit entry halves the count") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + trial % 3, l = 1 + trial % 8;
    std::vector<int> entries(static_cast<std::size_t>(k * l));
    for (auto& x : entries) x = e(rng);
    entries[rng() % entries.size()] = (trial % 2) ? 2 : -3;
    CHECK(omega_enumerate(SignMatrix(k, l, entries)).count <= (std::uint64_t{1} << (l - 1)));
  }
}

TEST_CASE("canonical form examples") {
  CHECK(canonical_form(SignMatrix{{0, 1}, {1, 0}}) == canonical_form(SignMatrix{{1, 0}, {0, 1}}));
  CHECK(canonical_form(SignMatrix{{1, -1}}) == canonical_form(SignMatrix{{-1, 1}}));
  CHECK(canonical_form(SignMatrix{{1, 1}}) != canonical_form(SignMatrix{{1, -1}}));

  SignMatrix a{{1, 1, -1, 0}, {1, 1, 0, -1}};
  CHECK(equivalent(a, a));
  CHECK(equivalent(a, SignMatrix{{-1, 1, 0, 1}, {0, 1, -1, 1}}));
  CHECK_FALSE(equivalent(SignMatrix{{1, 1}}, SignMatrix{{1, 1, 0}}));
}

TEST_CASE("canonical form matches exhaustive minimisation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 1 + trial % 4, l = 1 + trial % 7;
    auto a = random_sign(rng, k, l);
    auto c = canonical_matrix(a);
    CHECK(c.entries() == oracle::min_form(rows_of(a)));
    CHECK(canonical_matrix(c) == c);
    auto b = shuffled(a, rng);
    CHECK(canonical_form(b) == canonical_form(a));
    CHECK(omega_count_fast(b) == omega_count_fast(a));
  }
}

TEST_CASE("key order follows entry order") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_sign(rng, 2, 4), b = random_sign(rng, 2, 4);
    CHECK((encode_key(a) < encode_key(b)) == (a.entries() < b.entries()));
  }
}

TEST_CASE("matrix text format") {
  auto m = parse_matrix("# comment\n2 3\n\n1 -1 0\n0 1 1\n");
  CHECK(m == SignMatrix{{1, -1, 0}, {0, 1, 1}});
  CHECK(parse_matrix(to_text(m)) == m);
  CHECK(to_compact(m) == "1 -1 0;0 1 1");
  CHECK(BitVector::parse("0110").to_string() == "0110");
  CHECK(BitVector::parse("0110")[1]);

  auto line_of = [](const std::string& text) {
    try {
      parse_matrix(text);
    } catch (const FormatError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("2 2\n1 1\n1 x\n") == 3);
  CHECK(line_of("2 2\n1 1 1\n0 1\n") == 2);
  CHECK(line_of("2 2\n1 1\n") > 0);
  CHECK(line_of("two 2\n") == 1);
  CHECK(line_of("") != -1);
}
