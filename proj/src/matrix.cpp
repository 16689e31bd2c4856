#include "updown/matrix.hpp"

#include <bit>
#include <istream>
#include <ostream>

#include <omp.h>

namespace updown {

IntMatrix::IntMatrix(int order) : n_(order) {
  if (order < 1) throw std::invalid_argument("IntMatrix: order must be positive");
  a_.assign(static_cast<std::size_t>(order) * order, Int(0));
}

bool IntMatrix::is_zero_one() const {
  for (const Int& v : a_)
    if (v != 0 && v != 1) return false;
  return true;
}

PositionMask IntMatrix::to_mask() const {
  if (!is_zero_one())
    throw std::invalid_argument("to_mask: entries must be 0 or 1");
  PositionMask m = PositionMask::none(n_);
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= n_; ++c)
      if (at(r, c) == 1) m.set(r, c, true);
  return m;
}

IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.n_ != rhs.n_)
    throw std::invalid_argument("matrix subtraction: order mismatch");
  IntMatrix out(lhs.n_);
  for (std::size_t i = 0; i < lhs.a_.size(); ++i) out.a_[i] = lhs.a_[i] - rhs.a_[i];
  return out;
}

IntMatrix IntMatrix::read(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("matrix read: missing order");
  if (n < 1 || n > 4096) throw std::invalid_argument("matrix read: bad order");
  IntMatrix m(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (!(in >> m.at(r, c)))
        throw std::invalid_argument("matrix read: missing entry");
  return m;
}

void IntMatrix::write(std::ostream& out) const {
  out << n_ << '\n';
  for (int r = 1; r <= n_; ++r) {
    for (int c = 1; c <= n_; ++c) {
      if (c > 1) out << ' ';
      out << at(r, c);
    }
    out << '\n';
  }
}

IntMatrix ones_matrix(int n) {
  IntMatrix m(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) m.at(r, c) = 1;
  return m;
}

IntMatrix shifted_band(int n, int offset) {
  if (offset < 0 || offset > n - 1)
    throw std::invalid_argument("shifted_band: offset out of range");
  IntMatrix m(n);
  for (int r = 1; r + offset <= n; ++r) m.at(r, r + offset) = 1;
  return m;
}

IntMatrix staircase_ones(int n) {
  IntMatrix m(n);
  for (int r = 1; r <= n; ++r)
    for (int c = std::max(1, r - 1); c <= n; ++c) m.at(r, c) = 1;
  return m;
}

/* Bareiss: every intermediate division is exact, so the computation stays
 * in the integers all the way down. */
Int determinant(const IntMatrix& m) {
  const int n = m.order();
  std::vector<Int> a(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r * n + c] = m.at(r + 1, c + 1);

  int sign = 1;
  Int prev = 1;
  for (int p = 0; p < n - 1; ++p) {
    if (a[p * n + p] == 0) {
      int swap_row = -1;
      for (int r = p + 1; r < n; ++r)
        if (a[r * n + p] != 0) { swap_row = r; break; }
      if (swap_row < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a[p * n + c], a[swap_row * n + c]);
      sign = -sign;
    }
    for (int r = p + 1; r < n; ++r) {
      for (int c = p + 1; c < n; ++c) {
        a[r * n + c] = (a[p * n + p] * a[r * n + c] - a[r * n + p] * a[p * n + c]) / prev;
      }
      a[r * n + p] = 0;
    }
    prev = a[p * n + p];
  }
  return sign * a[static_cast<std::size_t>(n - 1) * n + (n - 1)];
}

namespace {

void check_matrix_cap(int n, int cap, bool force, const char* what) {
  if (n > cap && !force)
    throw resource_limit_error(std::string(what) + ": order " + std::to_string(n) +
                               " exceeds the default cap of " + std::to_string(cap) +
                               " (pass force to override)");
  if (n > 62) throw std::invalid_argument(std::string(what) + ": order too large");
}

/* One contiguous stretch of the subset range [from, to).  Row sums are
 * seeded from the Gray code of `from`, then updated one flip at a time. */
Int ryser_range(const IntMatrix& m, std::uint64_t from, std::uint64_t to) {
  const int n = m.order();
  std::vector<Int> row_sum(static_cast<std::size_t>(n), Int(0));
  const std::uint64_t start_code = from ^ (from >> 1);
  for (int j = 0; j < n; ++j)
    if (start_code >> j & 1)
      for (int i = 0; i < n; ++i) row_sum[i] += m.at(i + 1, j + 1);

  Int acc = 0;
  std::uint64_t code = start_code;
  for (std::uint64_t s = from; s < to; ++s) {
    if (s != from) {
      const int j = std::countr_zero(s);
      code ^= 1ull << j;
      if (code >> j & 1)
        for (int i = 0; i < n; ++i) row_sum[i] += m.at(i + 1, j + 1);
      else
        for (int i = 0; i < n; ++i) row_sum[i] -= m.at(i + 1, j + 1);
    }
    Int prod = 1;
    for (int i = 0; i < n; ++i) {
      if (row_sum[i] == 0) { prod = 0; break; }
      prod *= row_sum[i];
    }
    if (prod == 0) continue;
    if ((n - std::popcount(code)) % 2)
      acc -= prod;
    else
      acc += prod;
  }
  return acc;
}

}  // namespace

Int permanent(const IntMatrix& m, bool force) {
  const int n = m.order();
  check_matrix_cap(n, kPermanentCap, force, "permanent");
  const std::uint64_t subsets = 1ull << n;
  Int total = 0;
#pragma omp parallel
  {
    const int threads = omp_get_num_threads();
    const int tid = omp_get_thread_num();
    const std::uint64_t lo =
        1 + static_cast<std::uint64_t>(static_cast<unsigned __int128>(subsets - 1) * tid / threads);
    const std::uint64_t hi =
        1 + static_cast<std::uint64_t>(static_cast<unsigned __int128>(subsets - 1) * (tid + 1) / threads);
    Int local = (lo < hi) ? ryser_range(m, lo, hi) : Int(0);
#pragma omp critical
    total += local;
  }
  return total;
}

namespace ref {

Int permanent(const IntMatrix& m, bool force) {
  check_matrix_cap(m.order(), kPermanentCap, force, "permanent");
  return ryser_range(m, 1, 1ull << m.order());
}

Int perf(const IntMatrix& m, bool force) {
  const int n = m.order();
  check_matrix_cap(n, kPerfCap, force, "perf");
  if (n == 1) return m.at(1, 1);
  Int total = 0;
  enumerate_full_cycles(n, [&](std::span<const int> w) {
    Int prod = 1;
    for (int i = 1; i <= n; ++i) prod *= m.at(i, w[i - 1]);
    total += prod;
  }, force);
  return total;
}

}  // namespace ref

namespace {

/* Depth-first over full cycles with a running product; zero entries cut
 * the branch since they can only contribute zero terms. */
void perf_walk(const IntMatrix& m, detail::CycleWalk& w, std::vector<Int>& prod,
               Int& acc) {
  const int n = m.order();
  const int pos = w.next_pos();
  if (w.complete()) {
    acc += prod[n];
    return;
  }
  const std::uint64_t avail = ~w.used() & detail::value_mask(n);
  for (std::uint64_t rest = avail; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest) + 1;
    if (m.at(pos, v) == 0 || !w.admissible(v)) continue;
    prod[pos] = prod[pos - 1] * m.at(pos, v);
    w.push(v);
    perf_walk(m, w, prod, acc);
    w.pop();
  }
}

/* Valid (word[1], word[2]) seeds for splitting the cycle walk. */
std::vector<std::pair<int, int>> cycle_prefixes(int n) {
  std::vector<std::pair<int, int>> out;
  detail::CycleWalk w(n);
  for (int v1 = 1; v1 <= n; ++v1) {
    if (!w.admissible(v1)) continue;
    w.push(v1);
    for (int v2 = 1; v2 <= n; ++v2) {
      if (!w.admissible(v2)) continue;
      out.emplace_back(v1, v2);
    }
    w.pop();
  }
  return out;
}

}  // namespace

Int perf(const IntMatrix& m, bool force) {
  const int n = m.order();
  check_matrix_cap(n, kPerfCap, force, "perf");
  if (n == 1) return m.at(1, 1);
  if (n == 2) return m.at(1, 2) * m.at(2, 1);

  const auto seeds = cycle_prefixes(n);
  Int total = 0;
#pragma omp parallel
  {
    detail::CycleWalk w(n);
    std::vector<Int> prod(static_cast<std::size_t>(n) + 1, Int(1));
    Int local = 0;
#pragma omp for schedule(dynamic) nowait
    for (std::size_t t = 0; t < seeds.size(); ++t) {
      const auto [v1, v2] = seeds[t];
      if (m.at(1, v1) == 0 || m.at(2, v2) == 0) continue;
      prod[1] = m.at(1, v1);
      prod[2] = prod[1] * m.at(2, v2);
      w.push(v1);
      w.push(v2);
      perf_walk(m, w, prod, local);
      w.pop();
      w.pop();
    }
#pragma omp critical
    total += local;
  }
  return total;
}

namespace {

Int perf_expand_view(const IntMatrix& m, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  const int size = static_cast<int>(rows.size());
  if (size == 1) return m.at(rows[0], cols[0]);
  Int total = 0;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (int jpos = 1; jpos < size; ++jpos) {
    const Int& coeff = m.at(rows[0], cols[jpos]);
    if (coeff == 0) continue;
    /* Minor of (row 1, logical column jpos+1) with its first jpos columns
     * rotated left: the column that wore label 1 takes label jpos. */
    std::vector<int> sub_cols;
    sub_cols.reserve(static_cast<std::size_t>(size) - 1);
    for (int c = 1; c < jpos; ++c) sub_cols.push_back(cols[c]);
    sub_cols.push_back(cols[0]);
    for (int c = jpos + 1; c < size; ++c) sub_cols.push_back(cols[c]);
    total += coeff * perf_expand_view(m, sub_rows, sub_cols);
  }
  return total;
}

}  // namespace

Int perf_expand(const IntMatrix& m, bool force) {
  const int n = m.order();
  check_matrix_cap(n, kPerfCap, force, "perf_expand");
  std::vector<int> rows(static_cast<std::size_t>(n)), cols(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[i] = cols[i] = i + 1;
  return perf_expand_view(m, rows, cols);
}

Conjecture1Result conjecture1_check(int n, int k, bool force) {
  if (n < 3) throw std::invalid_argument("conjecture1_check: order must be at least 3");
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("conjecture1_check: band count out of range");
  IntMatrix lhs_m = ones_matrix(n);
  for (int j = 1; j <= k; ++j) lhs_m = lhs_m - shifted_band(n, j);
  IntMatrix rhs_m = ones_matrix(n - 1);
  for (int i = 0; i <= k - 1; ++i) rhs_m = rhs_m - shifted_band(n - 1, i);
  Conjecture1Result res;
  res.n = n;
  res.k = k;
  res.lhs = perf(lhs_m, force);
  res.rhs = permanent(rhs_m, force);
  res.equal = (res.lhs == res.rhs);
  return res;
}

}  // namespace updown
