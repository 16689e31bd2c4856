#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "updown/numeric.hpp"
#include "updown/permutation.hpp"

using namespace updown;

TEST_SUITE("permutation") {

TEST_CASE("word validation") {
  CHECK_NOTHROW(Permutation({3, 1, 2}));
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
}

TEST_CASE("up-down index basics") {
  CHECK(updown_index(Permutation({1})).k == 0);
  CHECK(updown_index(Permutation({1, 3, 2})).k == 2);  /* ascent, descent */
  CHECK(updown_index(Permutation({1, 2, 3, 4})).k == 7);
  CHECK(updown_index(Permutation({4, 3, 2, 1})).k == 0);
  CHECK(updown_index(Permutation({2, 3, 1})).k == 2);
  CHECK(updown_index(Permutation({3, 1, 2})).k == 1);
}

TEST_CASE("pattern round trip") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t k = 0; k < (1ull << (n - 1)); ++k) {
      const UpDownIndex idx{n, k};
      CHECK(pattern_index(pattern_of(idx)) == k);
    }
  }
  CHECK_THROWS_AS(pattern_of(UpDownIndex{3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(pattern_of(UpDownIndex{0, 0}), std::invalid_argument);
}

TEST_CASE("zigzag patterns") {
  CHECK(alternating_index(4) == 5);      /* 101 */
  CHECK(alternating_index(5) == 10);     /* 1010 */
  CHECK(antialternating_index(4) == 2);  /* 010 */
  CHECK(alternating_index(1) == 0);
  CHECK(complement(UpDownIndex{5, alternating_index(5)}).k == antialternating_index(5));
  CHECK_THROWS_AS(alternating_pattern(0), std::invalid_argument);
}

TEST_CASE("complement mirrors the block") {
  CHECK(complement(UpDownIndex{4, 5}).k == 2);
  CHECK(complement(UpDownIndex{1, 0}).k == 0);
  for (std::uint64_t k = 0; k < 16; ++k)
    CHECK(complement(complement(UpDownIndex{5, k})).k == k);
}

TEST_CASE("cycle structure") {
  CHECK(is_full_cycle(Permutation({2, 3, 1})));
  CHECK(is_full_cycle(Permutation({2, 1})));
  CHECK(!is_full_cycle(Permutation({1, 2})));
  CHECK(!is_full_cycle(Permutation({2, 1, 3})));
  CHECK(is_full_cycle(Permutation({1})));

  const CycleType t = cycle_type(Permutation({2, 1, 4, 3}));
  CHECK(t.counts == std::vector<int>{0, 2, 0, 0});
  CHECK(cycle_type(Permutation({3, 2, 1})).counts == std::vector<int>{1, 1, 0});
  CHECK(fixed_point_count(Permutation({3, 2, 1})) == 1);
  CHECK(fixed_point_count(Permutation({2, 3, 1})) == 0);
}

TEST_CASE("position masks") {
  PositionMask m = PositionMask::all(3);
  CHECK(m.allows(1, 1));
  m.set(1, 2, false);
  CHECK(!m.allows(1, 2));
  CHECK(m.allows(2, 2));
  const PositionMask none = PositionMask::none(3);
  CHECK(!none.allows(3, 3));
  CHECK_THROWS_AS(PositionMask::all(63), std::invalid_argument);
}

TEST_CASE("permutation enumeration is lexicographic and complete") {
  std::vector<std::vector<int>> seen;
  enumerate_permutations(3, [&](std::span<const int> w) {
    seen.emplace_back(w.begin(), w.end());
  });
  REQUIRE(seen.size() == 6);
  CHECK(seen.front() == std::vector<int>{1, 2, 3});
  CHECK(seen.back() == std::vector<int>{3, 2, 1});
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("full cycle enumeration matches the factorial count") {
  for (int n = 2; n <= 7; ++n) {
    std::uint64_t count = 0;
    std::vector<int> prev;
    enumerate_full_cycles(n, [&](std::span<const int> w) {
      std::vector<int> word(w.begin(), w.end());
      CHECK(is_full_cycle(Permutation(word)));
      if (!prev.empty()) CHECK(prev < word);
      prev = std::move(word);
      ++count;
    });
    CHECK(Int(count) == factorial(n - 1));
  }
}

TEST_CASE("full cycles of order 3") {
  std::vector<std::vector<int>> seen;
  enumerate_full_cycles(3, [&](std::span<const int> w) {
    seen.emplace_back(w.begin(), w.end());
  });
  REQUIRE(seen.size() == 2);
  CHECK(seen[0] == std::vector<int>{2, 3, 1});
  CHECK(seen[1] == std::vector<int>{3, 1, 2});
}

TEST_CASE("pattern-constrained matching") {
  /* Unrestricted alternating count of order 4 is the zigzag number 5. */
  MatchingQuery q;
  q.idx = UpDownIndex{4, alternating_index(4)};
  CHECK(count_matching(q) == 5);

  q.fixed_point_free = true;
  CHECK(count_matching(q) == 2);

  /* Forbidding position (1,1) cannot change a fixed-point-free count. */
  PositionMask no11 = PositionMask::all(4);
  no11.set(1, 1, false);
  q.restriction = &no11;
  CHECK(count_matching(q) == 2);

  q.fixed_point_free = false;
  std::uint64_t visited = 0;
  enumerate_matching(q, [&](std::span<const int> w) {
    CHECK(w[0] != 1);
    CHECK(updown_index_of(w) == q.idx.k);
    ++visited;
  });
  CHECK(visited == count_matching(q));
}

TEST_CASE("blocked mask yields nothing") {
  MatchingQuery q;
  q.idx = UpDownIndex{3, 1};
  const PositionMask none = PositionMask::none(3);
  q.restriction = &none;
  CHECK(count_matching(q) == 0);
}

TEST_CASE("enumeration caps") {
  const auto ignore = [](std::span<const int>) {};
  CHECK_THROWS_AS(enumerate_permutations(kEnumerationCap + 1, ignore),
                  resource_limit_error);
  CHECK_THROWS_AS(enumerate_full_cycles(kEnumerationCap + 1, ignore),
                  resource_limit_error);
  CHECK_THROWS_AS(enumerate_permutations(0, ignore), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_full_cycles(1, ignore), std::invalid_argument);
}

}  // TEST_SUITE
