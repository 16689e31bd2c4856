#pragma once

#include "updown/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace updown {

/* k >= 1 written as a sum of distinct powers of two: k = sum of 2^{t_j - 1}
 * with t_1 > t_2 > ... > t_m >= 1, plus the normalized offsets
 * s_i = t_1 - t_i + 1 (so s_1 = 1 < s_2 < ... < s_m = t_1 - t_m + 1). */
struct BitDecomposition {
  std::uint64_t k = 0;
  int m = 0;
  std::vector<int> t;
  std::vector<int> s;
};

BitDecomposition decompose(std::uint64_t k);

/* g = index of the highest set bit plus one, h = k with that bit cleared.
 * Requires k >= 1. */
std::pair<int, std::uint64_t> g_h(std::uint64_t k);

/* +1 for even popcount, -1 for odd. */
int thue_morse(std::uint64_t k);

/* Number of permutations of n with up-down index k, by four routes that
 * must agree.  All four take basis(n, 0) = 1. */

/* Inclusion-exclusion over subsets of the set bits of k, with binomial
 * chains C(n, t_{i_1}) C(t_{i_1}, t_{i_2}) ... */
Int basis_sum_t(long long n, std::uint64_t k);

/* The same sum re-indexed through the offsets s_i.  Only valid for
 * n >= t_1(k); below that the vanishing-binomial convention breaks the
 * identity, so the call refuses (std::domain_error). */
Int basis_sum_s(long long n, std::uint64_t k);

/* (m+1) x (m+1) integer determinant whose first row holds C(n, t_j) and 1,
 * with a unit subdiagonal and binomial upper triangle below it. */
Int basis_det(long long n, std::uint64_t k);

/* Two-term recursion basis(n, k) = basis(g, h) C(n, g) - basis(n, h),
 * memoized process-wide; safe for concurrent callers. */
Int basis_rec(long long n, std::uint64_t k);

/* The basis_det matrix with its top-right 1 replaced by 0; equals
 * basis(n, k) - thue_morse(k).  Requires k >= 1. */
Int basis_reduced(long long n, std::uint64_t k);

/* Four-term alternation basis(n,k) - basis(n,k+1) + basis(n,k+2) -
 * basis(n,k+3) == 0; defined for k divisible by 4. */
bool identity_abab(long long n, std::uint64_t k);

/* Even-k and odd-k halves of the row prefix k < 2^r each sum to
 * n(n-1)...(n-r+1)/2.  Requires 2 <= r <= n-1. */
bool halfsum_check(long long n, int r);

/* Terms 1..limit of the concatenated-block reading: term k is
 * basis(g(k), h(k)). */
std::vector<Int> concat_basis(std::size_t limit);

/* basis(n, k) for every k < 2^{n-1}, by the recursion. */
std::vector<Int> basis_block(int n);

}  // namespace updown
