#include "doctest.h"

#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "updown/basis.hpp"
#include "updown/numeric.hpp"
#include "updown/permutation.hpp"

using namespace updown;

TEST_SUITE("basis") {

TEST_CASE("binomials and factorials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == Int("118264581564861424"));
  CHECK(factorial(10) == 3628800);
  CHECK(falling_factorial(7, 3) == 210);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("bit decomposition") {
  const BitDecomposition d = decompose(11);  /* 1011 */
  CHECK(d.m == 3);
  CHECK(d.t == std::vector<int>{4, 2, 1});
  CHECK(d.s == std::vector<int>{1, 3, 4});
  CHECK(decompose(0).m == 0);

  CHECK(g_h(7) == std::pair<int, std::uint64_t>{3, 3});
  CHECK(g_h(1) == std::pair<int, std::uint64_t>{1, 0});
  CHECK(g_h(8) == std::pair<int, std::uint64_t>{4, 0});
  CHECK_THROWS_AS(g_h(0), std::invalid_argument);
}

TEST_CASE("sign sequence") {
  const std::vector<int> first = {1, -1, -1, 1, -1, 1, 1, -1,
                                  -1, 1, 1, -1, 1, -1, -1, 1};
  for (std::uint64_t k = 0; k < first.size(); ++k) CHECK(thue_morse(k) == first[k]);
}

TEST_CASE("small blocks pinned") {
  CHECK(basis_block(1) == std::vector<Int>{1});
  CHECK(basis_block(2) == std::vector<Int>{1, 1});
  CHECK(basis_block(3) == std::vector<Int>{1, 2, 2, 1});
  CHECK(basis_block(4) == std::vector<Int>{1, 3, 5, 3, 3, 5, 3, 1});
}

TEST_CASE("pinned values, including the two lookalikes") {
  CHECK(basis_rec(5, 7) == 4);
  CHECK(basis_rec(5, 4) == 9);
  CHECK(basis_rec(5, 5) == 16);
  CHECK(basis_sum_t(3, 3) == 1);
  CHECK(basis_sum_s(3, 3) == 1);
  CHECK(basis_det(3, 3) == 1);
  CHECK(basis_det(5, 4) == 9);
}

TEST_CASE("the four evaluators agree") {
  for (long long n = 1; n <= 8; ++n) {
    for (std::uint64_t k = 0; k < (1ull << (n - 1)); ++k) {
      const Int want = basis_rec(n, k);
      CHECK(basis_sum_t(n, k) == want);
      CHECK(basis_sum_s(n, k) == want);
      CHECK(basis_det(n, k) == want);
    }
  }
}

TEST_CASE("blocks sum to the factorial and mirror") {
  for (int n = 1; n <= 8; ++n) {
    const std::vector<Int> block = basis_block(n);
    Int total = 0;
    for (const Int& v : block) total += v;
    CHECK(total == factorial(n));
    for (std::size_t k = 0; k < block.size(); ++k)
      CHECK(block[k] == block[block.size() - 1 - k]);
  }
}

TEST_CASE("histogram oracle") {
  for (int n = 1; n <= 7; ++n) {
    const std::vector<std::uint64_t> buckets = oracle::bucket_counts(n);
    const std::vector<Int> block = basis_block(n);
    REQUIRE(buckets.size() == block.size());
    for (std::size_t k = 0; k < buckets.size(); ++k)
      CHECK(Int(buckets[k]) == block[k]);
  }
}

TEST_CASE("the formal reading extends past the block") {
  /* For n below t_1 the subset form, determinant and recursion still
   * agree; the offset form refuses the regime. */
  CHECK(basis_rec(2, 4) == -1);
  CHECK(basis_sum_t(2, 4) == -1);
  CHECK(basis_det(2, 4) == -1);
  CHECK_THROWS_AS(basis_sum_s(2, 4), std::domain_error);
  for (std::uint64_t k = 0; k < 64; ++k) {
    CHECK(basis_rec(0, k) == thue_morse(k));
    CHECK(basis_det(0, k) == thue_morse(k));
    CHECK(basis_sum_t(0, k) == thue_morse(k));
  }
}

TEST_CASE("reduced determinant drops the trailing unit") {
  CHECK(basis_reduced(3, 1) == 3);
  CHECK(basis_reduced(3, 2) == 3);
  CHECK(basis_reduced(5, 2) == 10);
  CHECK_THROWS_AS(basis_reduced(3, 0), std::invalid_argument);
}

TEST_CASE("four-term alternation of the evaluator") {
  CHECK(identity_abab(3, 0));
  CHECK(identity_abab(5, 0));
  CHECK(identity_abab(5, 4));
  CHECK(identity_abab(12, 2040));
  CHECK_THROWS_AS(identity_abab(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(identity_abab(3, 4), std::invalid_argument);
}

TEST_CASE("half sums split the falling factorial") {
  for (long long n = 3; n <= 9; ++n)
    for (int r = 2; r <= n - 1; ++r) CHECK(halfsum_check(n, r));
  CHECK_THROWS_AS(halfsum_check(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(halfsum_check(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(halfsum_check(40, 31), resource_limit_error);
}

TEST_CASE("concatenated blocks") {
  const std::vector<Int> seq = concat_basis(15);
  CHECK(seq == std::vector<Int>{1, 1, 1, 1, 2, 2, 1, 1, 3, 5, 3, 3, 5, 3, 1});
}

}  // TEST_SUITE
