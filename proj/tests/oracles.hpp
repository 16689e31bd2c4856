#pragma once

/* Brute-force oracles used only by tests.  Each one computes its answer by
 * a route independent of the library code it checks: plain std::next_permutation
 * scans, textbook recurrences, and cofactor expansion. */

#include "updown/matrix.hpp"
#include "updown/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using updown::Int;

/* Bucket all of S_n by up-down index. */
inline std::vector<std::uint64_t> bucket_counts(int n) {
  std::vector<std::uint64_t> counts(1ull << (n - 1), 0);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    ++counts[updown::updown_index_of(w)];
  } while (std::next_permutation(w.begin(), w.end()));
  return counts;
}

/* Sum over all sigma of the diagonal product. */
inline Int permanent(const updown::IntMatrix& m) {
  const int n = m.order();
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  Int total = 0;
  do {
    Int prod = 1;
    for (int i = 1; i <= n; ++i) prod *= m.at(i, w[i - 1]);
    total += prod;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

/* Same sum restricted to full cycles, order 1 meaning the single entry. */
inline Int cycle_permanent(const updown::IntMatrix& m) {
  const int n = m.order();
  if (n == 1) return m.at(1, 1);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  Int total = 0;
  do {
    if (!updown::is_full_cycle(updown::Permutation(w))) continue;
    Int prod = 1;
    for (int i = 1; i <= n; ++i) prod *= m.at(i, w[i - 1]);
    total += prod;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

/* Signed version: Leibniz determinant. */
inline Int determinant(const updown::IntMatrix& m) {
  const int n = m.order();
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  Int total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += w[i] > w[j];
    Int prod = (inversions % 2) ? -1 : 1;
    for (int i = 1; i <= n; ++i) prod *= m.at(i, w[i - 1]);
    total += prod;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

/* D_0..D_count via D_n = (n-1)(D_{n-1} + D_{n-2}). */
inline std::vector<Int> derangement_numbers(int count) {
  std::vector<Int> d(static_cast<std::size_t>(count) + 1);
  d[0] = 1;
  if (count >= 1) d[1] = 0;
  for (int n = 2; n <= count; ++n) d[n] = (n - 1) * (d[n - 1] + d[n - 2]);
  return d;
}

}  // namespace oracle
