#pragma once

#include "updown/numeric.hpp"
#include "updown/permutation.hpp"

#include <iosfwd>
#include <vector>

namespace updown {

/* Dense square matrix of arbitrary-precision integers, 1-based access. */
class IntMatrix {
public:
  explicit IntMatrix(int order);

  int order() const { return n_; }
  Int& at(int r, int c) { return a_[idx(r, c)]; }
  const Int& at(int r, int c) const { return a_[idx(r, c)]; }

  bool is_zero_one() const;
  /* Rows become position-mask rows; all entries must be 0 or 1. */
  PositionMask to_mask() const;

  bool operator==(const IntMatrix&) const = default;
  friend IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs);

  /* Text form: first line the order, then one line per row. */
  static IntMatrix read(std::istream& in);
  void write(std::ostream& out) const;

private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r - 1) * n_ + (c - 1);
  }

  int n_;
  std::vector<Int> a_;
};

/* All-ones matrix. */
IntMatrix ones_matrix(int n);

/* Ones exactly at (r, r+offset) for 1 <= r <= n-offset; offset 0 is the
 * identity.  Requires 0 <= offset <= n-1. */
IntMatrix shifted_band(int n, int offset);

/* Ones at (r, c) for c >= r-1: full first two rows, then one fewer
 * leading one per row.  Its permanent is 2^{n-1}. */
IntMatrix staircase_ones(int n);

/* Fraction-free elimination; exact for any integer entries. */
Int determinant(const IntMatrix& m);

inline constexpr int kPermanentCap = 13;
inline constexpr int kPerfCap = 12;

/* Permanent by inclusion-exclusion over column subsets with Gray-code
 * row-sum updates, OpenMP-partitioned over the subset range. */
Int permanent(const IntMatrix& m, bool force = false);

/* Sum of diagonal products over full cycles only.  Order 1 is read as the
 * single entry.  Backtracks over cycles, skipping zero entries. */
Int perf(const IntMatrix& m, bool force = false);

/* Same value by first-row expansion: perf A = sum over j >= 2 of
 * a_{1j} * perf of the minor A_{1,j} with its first j-1 columns rotated
 * left by one.  Kept as an independent evaluation route. */
Int perf_expand(const IntMatrix& m, bool force = false);

namespace ref {
/* Serial Gray-code walk over all column subsets. */
Int permanent(const IntMatrix& m, bool force = false);
/* Definitional: visits every full cycle via the enumerator. */
Int perf(const IntMatrix& m, bool force = false);
}  // namespace ref

/* Both sides of the cycle-permanent / permanent shift identity:
 * perf(J_n minus bands 1..k) against per(J_{n-1} minus bands 0..k-1). */
struct Conjecture1Result {
  int n = 0;
  int k = 0;
  Int lhs;
  Int rhs;
  bool equal = false;
};

Conjecture1Result conjecture1_check(int n, int k, bool force = false);

}  // namespace updown
