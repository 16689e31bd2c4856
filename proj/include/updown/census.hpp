#pragma once

#include "updown/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace updown {

/* counts[k] = number of permutations in the census class with up-down
 * index k; the vector always spans the full block 0 <= k < 2^{n-1}.
 * Counts are bounded by (n-1)!, comfortably inside 64 bits for every
 * order this library will enumerate. */
struct CensusBlock {
  int n = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total() const;
  bool operator==(const CensusBlock&) const = default;
};

inline constexpr int kCycleCensusCap = 11;
inline constexpr int kDerangementCensusCap = 10;

/* Full cycles bucketed by up-down index.  n = 1 is the convention
 * block [1]. */
CensusBlock full_cycle_block(int n, bool force = false);

/* Fixed-point-free permutations bucketed by up-down index; n = 1 gives
 * [0] since the only permutation fixes its point. */
CensusBlock derangement_block(int n, bool force = false);

namespace ref {
CensusBlock full_cycle_block(int n, bool force = false);
CensusBlock derangement_block(int n, bool force = false);
}  // namespace ref

/* (basis(n,k) - thue_morse(k)) / n, exact and in lowest terms. */
Rational rhs_conjecture2(int n, std::uint64_t k);

int smallest_prime_factor(int n);

/* True when every divisor of n greater than 1 exceeds t_1(k), i.e. the
 * smallest prime factor of n beats the highest bit position of k.
 * k = 0 is outside the predicate's domain. */
bool spf_condition(int n, std::uint64_t k);

struct Conjecture2Row {
  std::uint64_t k = 0;
  bool condition = false;
  std::uint64_t count = 0;              /* census value [n,k] */
  Rational rhs;                         /* (basis - thue_morse)/n */
  Rational residual;                    /* count - rhs */
  std::optional<Rational> ratio;        /* count*n / (basis - thue_morse) */
};

struct Conjecture2Report {
  int n = 0;
  std::vector<Conjecture2Row> rows;
  bool conditional_equalities_hold = false;
  bool conditional_rhs_integral = false;
};

/* Census sweep of one block against the closed form, k = 0 carried along
 * as an unconditioned row. */
Conjecture2Report check_conjecture2(int n, bool force = false);

struct Eq21Row {
  std::uint64_t k = 0;
  bool holds = false;
};

/* Four-term alternation of census counts at k, k+1, k+2, k+3 for every
 * k divisible by 4 inside the block. */
std::vector<Eq21Row> check_eq21(int n, bool force = false);

/* counts[k] == counts[2^{n-1}-1-k] across the block. */
bool symmetry_check(const CensusBlock& b);

/* First and last block entries are zero (meaningful for n >= 3). */
bool boundary_zeros(const CensusBlock& b);

/* Blocks for n = 1, 2, 3, ... laid end to end, truncated to `limit`. */
std::vector<std::uint64_t> concat_cycles(std::size_t limit, bool force = false);
std::vector<std::uint64_t> concat_derangements(std::size_t limit, bool force = false);

/* All check_eq21 rows true.  A heuristic signal, not a primality proof. */
bool primality_signal(int n, bool force = false);

}  // namespace updown
