#include "doctest.h"

#include <map>
#include <set>
#include <vector>

#include "updown/census.hpp"
#include "updown/indicator.hpp"
#include "updown/numeric.hpp"
#include "updown/permutation.hpp"

using namespace updown;

namespace {

CycleTypePolynomial poly(std::initializer_list<std::pair<std::vector<int>, int>> terms) {
  CycleTypePolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_SUITE("indicator") {

TEST_CASE("term arithmetic and canonical text") {
  CycleTypePolynomial p;
  p.add_term({2}, 1);
  p.add_term({0, 1}, 3);
  p.add_term({0, 1}, -3);  /* cancels */
  CHECK(p.term_count() == 1);
  CHECK(p.coefficient({2}) == 1);
  CHECK(p.coefficient({0, 1}) == 0);
  p.add_term({2, 0, 0}, 4);  /* trailing zeros normalize to the same key */
  CHECK(p.coefficient({2}) == 5);
  CHECK_THROWS_AS(p.add_term({-1}, 1), std::invalid_argument);

  const CycleTypePolynomial q =
      poly({{{0, 0, 0, 1}, 1}, {{1, 0, 1}, 2}, {{0, 2}, 1}, {{2, 1}, 1}});
  CHECK(q.str() == "1 t4\n2 t1 t3\n1 t2^2\n1 t1^2 t2");
  CHECK(CycleTypePolynomial::parse(q.str()) == q);
  CHECK(CycleTypePolynomial().str() == "0");
  CHECK(CycleTypePolynomial::parse("0").is_zero());
  CHECK_THROWS_AS(CycleTypePolynomial::parse("1 banana"), std::invalid_argument);
  CHECK_THROWS_AS(CycleTypePolynomial::parse(""), std::invalid_argument);
}

TEST_CASE("weight and homogeneity") {
  const CycleTypePolynomial q = poly({{{2, 1}, 1}, {{0, 0, 0, 1}, 5}});
  CHECK(q.is_homogeneous());
  CHECK(q.weight() == 4);
  const CycleTypePolynomial mixed = poly({{{1}, 1}, {{0, 1}, 1}});
  CHECK(!mixed.is_homogeneous());
  CHECK_THROWS_AS(mixed.weight(), std::logic_error);
  CHECK(CycleTypePolynomial().weight() == 0);
}

TEST_CASE("tiny indicators pinned") {
  CHECK(cyclic_indicator(1, Zigzag::alternating) == poly({{{1}, 1}}));
  CHECK(cyclic_indicator(2, Zigzag::alternating) == poly({{{2}, 1}}));
  CHECK(cyclic_indicator(2, Zigzag::antialternating) == poly({{{0, 1}, 1}}));
  CHECK(cyclic_indicator(3, Zigzag::alternating) ==
        poly({{{1, 1}, 1}, {{0, 0, 1}, 1}}));
  CHECK(cyclic_indicator(4, Zigzag::alternating) ==
        poly({{{0, 0, 0, 1}, 1}, {{1, 0, 1}, 2}, {{0, 2}, 1}, {{2, 1}, 1}}));
}

TEST_CASE("restricted positions respect the mask") {
  /* Knocking out the diagonal is the fixed-point-free restriction. */
  PositionMask offdiag = PositionMask::all(4);
  for (int i = 1; i <= 4; ++i) offdiag.set(i, i, false);
  const CycleTypePolynomial restricted =
      cyclic_indicator(offdiag, Zigzag::alternating);
  CHECK(restricted.coefficient({2, 1}) == 0);
  CHECK(restricted.sum_of_coefficients() == 2);

  std::map<int, Int> kill_fixed{{1, 0}, {2, 1}, {3, 1}, {4, 1}};
  CHECK(specialize(cyclic_indicator(4, Zigzag::alternating), kill_fixed) == 2);
}

TEST_CASE("serial and parallel accumulation agree") {
  for (int n = 1; n <= 8; ++n) {
    const PositionMask all = PositionMask::all(n);
    for (Zigzag shape : {Zigzag::alternating, Zigzag::antialternating})
      CHECK(cyclic_indicator(n, shape) == ref::cyclic_indicator(all, shape));
  }
}

TEST_CASE("indicator properties") {
  const std::vector<Int> a = euler_numbers(9);
  for (int n = 1; n <= 9; ++n) {
    const CycleTypePolynomial ind = cyclic_indicator(n, Zigzag::alternating);
    CHECK(ind.sum_of_coefficients() == a[n - 1]);
    CHECK(ind.weight() == n);  /* every cycle type partitions n */
  }
}

TEST_CASE("zigzag counts by the triangle") {
  CHECK(euler_numbers(12) ==
        std::vector<Int>{1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765});
  CHECK_THROWS_AS(euler_numbers(0), std::invalid_argument);
}

TEST_CASE("full-cycle coefficients match the census") {
  const std::vector<Int> expected = {1, 0, 1, 1, 3, 10, 39, 173, 882};
  for (int n = 1; n <= 9; ++n) {
    CHECK(alt_full_cycles(n) == expected[n - 1]);
    const CensusBlock block = full_cycle_block(n);
    CHECK(Int(block.counts[alternating_index(n)]) == expected[n - 1]);
  }
}

TEST_CASE("fixed-point-free zigzag counts") {
  const std::vector<Int> b = {0, 0, 1, 2, 6, 22, 102, 506};
  const std::vector<Int> bstar = {0, 1, 1, 2, 6, 24, 102, 528};
  for (int n = 1; n <= 8; ++n) {
    const ZigzagDerangements d = alt_derangements(n);
    CHECK(d.alternating == b[n - 1]);
    CHECK(d.antialternating == bstar[n - 1]);
  }
}

TEST_CASE("difference polynomials") {
  CHECK(r_poly(2) == poly({{{2}, 1}, {{0, 1}, -1}}));
  CHECK(r_poly(4).is_zero());
  for (int n : {3, 5, 7}) CHECK(r_poly(n).is_zero());
  CHECK(r_poly(6) == poly({{{4, 1}, 1},
                           {{3, 0, 1}, 2},
                           {{2, 0, 0, 1}, 1},
                           {{1, 1, 1}, -2},
                           {{0, 3}, -1},
                           {{0, 1, 0, 1}, -1}}));
}

TEST_CASE("division by the leading factor") {
  const PolyDivision cube = quotient_by_factor(poly({{{3}, 1}}));
  CHECK(cube.quotient == poly({{{1}, 1}}));
  CHECK(cube.remainder == poly({{{1, 1}, 1}}));

  const PolyDivision r6 = quotient_by_factor(r_poly(6));
  CHECK(r6.remainder.is_zero());
  CHECK(r6.quotient == poly({{{0, 0, 0, 1}, 1}, {{1, 0, 1}, 2}, {{0, 2}, 1}, {{2, 1}, 1}}));

  const PolyDivision zero = quotient_by_factor(CycleTypePolynomial());
  CHECK(zero.quotient.is_zero());
  CHECK(zero.remainder.is_zero());
}

TEST_CASE("quotient extremes") {
  CHECK(max_quotient_coeff(2).coefficient == 1);
  CHECK(!max_quotient_coeff(2).is_t1_t2nm3);
  CHECK(max_quotient_coeff(4).coefficient == 0);
  const QuotientExtreme six = max_quotient_coeff(6);
  CHECK(six.coefficient == 2);
  CHECK(six.monomial == CycleTypePolynomial::Exponents{1, 0, 1});
  CHECK(six.is_t1_t2nm3);
  const QuotientExtreme eight = max_quotient_coeff(8);
  CHECK(eight.coefficient == 12);
  CHECK(eight.monomial == CycleTypePolynomial::Exponents{1, 0, 0, 0, 1});
  CHECK(eight.is_t1_t2nm3);
  /* The printed order-8 display carries a weight-9 term; the computed
   * quotient puts the 12 on t1*t5 and nothing on any weight-9 slot. */
  const PolyDivision r8 = quotient_by_factor(r_poly(8));
  CHECK(r8.quotient.coefficient({1, 0, 0, 0, 1}) == 12);
  CHECK(r8.quotient.coefficient({1, 0, 0, 0, 0, 0, 0, 1}) == 0);
  CHECK(r8.quotient.weight() == 6);
}

TEST_CASE("substitution identities") {
  for (int even_n : {2, 4, 6, 8}) CHECK(eq47_check(even_n));
  CHECK_THROWS_AS(specialize(r_poly(6), std::map<int, Int>{{1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("rational enclosure of e") {
  const RationalBracket e = RationalBracket::e_enclosure();
  CHECK(e.low < e.high);
  CHECK(e.high - e.low == Rational(1) / Rational(Int(15) * factorial(15)));
  /* The window is about 5e-14 wide, so pin digits well inside it. */
  CHECK(e.low > Rational(271828182845ll) / 100000000000ll);
  CHECK(e.high < Rational(271828182846ll) / 100000000000ll);
}

TEST_CASE("ratio rows over the pinned sequences") {
  const std::vector<Int> a = {1, 1, 2, 5, 16, 61, 272, 1385};
  const std::vector<Int> b = {0, 0, 1, 2, 6, 22, 102, 506};
  const std::vector<Int> bstar = {0, 1, 1, 2, 6, 24, 102, 528};
  const std::vector<RatioRow> rows = ratio_rows_from(a, b, bstar);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n == 4);
  CHECK(rows[0].lower == Rational(5) / 2);
  CHECK(rows[0].upper == Rational(5) / 2);
  CHECK(rows[0].lower_below_e);
  CHECK(!rows[0].upper_above_e);  /* 5/2 sits below the enclosure */
  CHECK(rows[1].n == 6);
  CHECK(rows[1].lower == Rational(61) / 24);
  CHECK(rows[1].upper == Rational(61) / 22);
  CHECK(rows[1].lower_below_e);
  CHECK(rows[1].upper_above_e);
  CHECK(rows[1].lower_increased);
  CHECK(rows[2].n == 8);
  CHECK(rows[2].upper_decreased);
  CHECK(rows[2].lower_increased);
}

TEST_CASE("ratio report recomputes the inputs") {
  const std::vector<RatioRow> rows = ratio_report(8);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].a == 61);
  CHECK(rows[1].b == 22);
  CHECK(rows[1].bstar == 24);
}

TEST_CASE("coefficient groups") {
  const CycleTypePolynomial alt6 = cyclic_indicator(6, Zigzag::alternating);
  MonomialSelector everything;
  everything.all_free = true;
  CHECK(coeff_group_sum(alt6, everything) == 61);

  MonomialSelector t6_only;
  t6_only.fixed[6] = 1;
  CHECK(coeff_group_sum(alt6, t6_only) == 10);

  MonomialSelector t4_group;
  t4_group.fixed[4] = 1;
  t4_group.free_vars = {1, 2};
  CHECK(coeff_group_sum(alt6, t4_group) == 15);  /* 7 t2t4 + 8 t1^2t4 */
}

TEST_CASE("the order-10 group split") {
  const CycleTypePolynomial alt = cyclic_indicator(10, Zigzag::alternating);
  const CycleTypePolynomial anti = cyclic_indicator(10, Zigzag::antialternating);
  CHECK(alt.coefficient({6, 0, 0, 1}) == 6);
  CHECK(alt.coefficient({4, 1, 0, 1}) == 241);
  CHECK(alt.coefficient({2, 2, 0, 1}) == 770);
  CHECK(alt.coefficient({0, 3, 0, 1}) == 248);
  CHECK(anti.coefficient({6, 0, 0, 1}) == 0);
  CHECK(anti.coefficient({4, 1, 0, 1}) == 168);
  CHECK(anti.coefficient({2, 2, 0, 1}) == 809);
  CHECK(anti.coefficient({0, 3, 0, 1}) == 288);
  MonomialSelector sel;
  sel.fixed[4] = 1;
  sel.free_vars = {1, 2};
  CHECK(coeff_group_sum(alt, sel) == 1265);
  CHECK(coeff_group_sum(anti, sel) == 1265);
}

TEST_CASE("indicator cap") {
  CHECK_THROWS_AS(cyclic_indicator(kIndicatorCap + 1, Zigzag::alternating),
                  resource_limit_error);
}

}  // TEST_SUITE
