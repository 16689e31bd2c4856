#include "doctest.h"

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "updown/matrix.hpp"
#include "updown/numeric.hpp"

using namespace updown;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int order, int lo, int hi) {
  IntMatrix m(order);
  std::uniform_int_distribution<int> dist(lo, hi);
  for (int i = 1; i <= order; ++i)
    for (int j = 1; j <= order; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("construction and text round trip") {
  IntMatrix m(2);
  m.at(1, 1) = 3;
  m.at(1, 2) = -1;
  m.at(2, 1) = 0;
  m.at(2, 2) = 7;
  std::ostringstream out;
  m.write(out);
  std::istringstream in(out.str());
  CHECK(IntMatrix::read(in) == m);
  CHECK(!m.is_zero_one());
  CHECK(ones_matrix(3).is_zero_one());
  CHECK_THROWS_AS(IntMatrix(0), std::invalid_argument);
}

TEST_CASE("band and staircase shapes") {
  const IntMatrix band = shifted_band(4, 1);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(band.at(i, j) == (j == i + 1 ? 1 : 0));
  const IntMatrix stair = staircase_ones(3);
  CHECK(stair.at(1, 1) == 1);
  CHECK(stair.at(3, 1) == 0);
  CHECK(stair.at(3, 2) == 1);
  CHECK_THROWS_AS(shifted_band(3, 3), std::invalid_argument);
}

TEST_CASE("determinant against the signed expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int order = 1 + trial % 5;
    const IntMatrix m = random_matrix(rng, order, -4, 4);
    CHECK(determinant(m) == oracle::determinant(m));
  }
}

TEST_CASE("determinant needs the pivot swap") {
  IntMatrix m(3);
  /* Leading entry zero forces row exchange inside the elimination. */
  m.at(1, 1) = 0; m.at(1, 2) = 2; m.at(1, 3) = 1;
  m.at(2, 1) = 1; m.at(2, 2) = 0; m.at(2, 3) = 3;
  m.at(3, 1) = 2; m.at(3, 2) = 1; m.at(3, 3) = 0;
  CHECK(determinant(m) == oracle::determinant(m));
  CHECK(determinant(ones_matrix(4)) == 0);
}

TEST_CASE("permanent matches the subset oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const int order = 1 + trial % 6;
    const IntMatrix m = random_matrix(rng, order, 0, trial % 3 == 0 ? 3 : 1);
    const Int want = oracle::permanent(m);
    CHECK(permanent(m) == want);
    CHECK(ref::permanent(m) == want);
  }
  for (int n = 1; n <= 8; ++n) CHECK(permanent(ones_matrix(n)) == factorial(n));
}

TEST_CASE("staircase permanents double") {
  for (int m = 0; m <= 8; ++m)
    CHECK(permanent(staircase_ones(m + 1)) == Int(1) << m);
}

TEST_CASE("cycle permanent routes agree") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int order = 1 + trial % 6;
    const IntMatrix m = random_matrix(rng, order, 0, 1);
    const Int want = oracle::cycle_permanent(m);
    CHECK(perf(m) == want);
    CHECK(ref::perf(m) == want);
    CHECK(perf_expand(m) == want);
  }
}

TEST_CASE("cycle permanent of the unrestricted matrix") {
  for (int n = 1; n <= 8; ++n) CHECK(perf(ones_matrix(n)) == factorial(n - 1));
  CHECK(perf(ones_matrix(2)) == 1);
  /* Weighted entries exercise the product bookkeeping. */
  IntMatrix w(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) w.at(i, j) = i + j;
  CHECK(perf(w) == oracle::cycle_permanent(w));
  CHECK(perf_expand(w) == oracle::cycle_permanent(w));
}

TEST_CASE("banded difference instances") {
  const Conjecture1Result r31 = conjecture1_check(3, 1);
  CHECK(r31.equal);
  CHECK(r31.lhs == 1);
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= n - 1; ++k) CHECK(conjecture1_check(n, k).equal);
  CHECK_THROWS_AS(conjecture1_check(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(conjecture1_check(4, 4), std::invalid_argument);
}

TEST_CASE("resource caps") {
  CHECK_THROWS_AS(permanent(ones_matrix(kPermanentCap + 1)), resource_limit_error);
  CHECK_THROWS_AS(perf(ones_matrix(kPerfCap + 1)), resource_limit_error);
  CHECK(permanent(ones_matrix(kPermanentCap + 1), true) == factorial(14));
}

}  // TEST_SUITE
