#include "updown/basis.hpp"

#include "updown/matrix.hpp"

#include <bit>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace updown {

BitDecomposition decompose(std::uint64_t k) {
  BitDecomposition d;
  d.k = k;
  d.m = std::popcount(k);
  d.t.reserve(d.m);
  for (int b = 63; b >= 0; --b)
    if (k >> b & 1) d.t.push_back(b + 1);
  d.s.reserve(d.m);
  for (int i = 0; i < d.m; ++i) d.s.push_back(d.t[0] - d.t[i] + 1);
  return d;
}

std::pair<int, std::uint64_t> g_h(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("g_h: k must be positive");
  const int g = std::bit_width(k);
  return {g, k - (1ull << (g - 1))};
}

int thue_morse(std::uint64_t k) {
  return (std::popcount(k) % 2) ? -1 : 1;
}

Int basis_sum_t(long long n, std::uint64_t k) {
  if (n < 0) throw std::invalid_argument("basis_sum_t: negative order");
  const BitDecomposition d = decompose(k);
  const int m = d.m;
  if (m == 0) return 1;
  if (m > 32) throw std::invalid_argument("basis_sum_t: k has too many set bits");

  std::vector<Int> top(static_cast<std::size_t>(m));
  std::vector<Int> chain(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    top[i] = binomial(n, d.t[i]);
    for (int j = i + 1; j < m; ++j) chain[i * m + j] = binomial(d.t[i], d.t[j]);
  }

  Int total = (m % 2) ? -1 : 1;
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    int first = std::countr_zero(mask);
    Int prod = top[first];
    int prev = first;
    for (std::uint64_t rest = mask & (mask - 1); rest; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      prod *= chain[prev * m + j];
      prev = j;
    }
    if ((m - std::popcount(mask)) % 2)
      total -= prod;
    else
      total += prod;
  }
  return total;
}

Int basis_sum_s(long long n, std::uint64_t k) {
  if (n < 0) throw std::invalid_argument("basis_sum_s: negative order");
  if (k == 0) return 1;
  const BitDecomposition d = decompose(k);
  const int m = d.m;
  const int t1 = d.t[0];
  if (m > 32) throw std::invalid_argument("basis_sum_s: k has too many set bits");
  if (n < t1)
    throw std::domain_error("basis_sum_s: requires n >= t_1(k)");

  Int total = (m % 2) ? -1 : 1;
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    /* Walk the chosen offsets in increasing index order; the last one
     * feeds the C(n, ...) factor, consecutive pairs feed the rest. */
    int last = -1;
    Int prod = 1;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      if (last >= 0)
        prod *= binomial(n - t1 + d.s[i] - 1, d.s[i] - d.s[last]);
      last = i;
    }
    prod *= binomial(n, t1 + 1 - d.s[last]);
    if ((m - std::popcount(mask)) % 2)
      total -= prod;
    else
      total += prod;
  }
  return total;
}

namespace {

IntMatrix basis_matrix(long long n, const BitDecomposition& d, bool reduced) {
  const int m = d.m;
  IntMatrix a(m + 1);
  for (int j = 0; j < m; ++j) a.at(1, j + 1) = binomial(n, d.t[j]);
  a.at(1, m + 1) = reduced ? 0 : 1;
  for (int r = 2; r <= m + 1; ++r) {
    a.at(r, r - 1) = 1;
    for (int j = r; j <= m; ++j) a.at(r, j) = binomial(d.t[r - 2], d.t[j - 1]);
    a.at(r, m + 1) = 1;
  }
  return a;
}

}  // namespace

Int basis_det(long long n, std::uint64_t k) {
  if (n < 0) throw std::invalid_argument("basis_det: negative order");
  return determinant(basis_matrix(n, decompose(k), false));
}

Int basis_reduced(long long n, std::uint64_t k) {
  if (n < 0) throw std::invalid_argument("basis_reduced: negative order");
  if (k == 0) throw std::invalid_argument("basis_reduced: k must be positive");
  return determinant(basis_matrix(n, decompose(k), true));
}

namespace {

/* Process-wide memo for basis_rec.  Concurrent first writers may race to
 * insert the same key; they all carry the same value, so last write wins
 * harmlessly. */
class BasisMemo {
public:
  bool find(std::uint64_t key, Int& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }

  void store(std::uint64_t key, const Int& value) {
    std::unique_lock lock(mu_);
    map_[key] = value;
  }

  static std::uint64_t key(long long n, std::uint64_t k) {
    return (static_cast<std::uint64_t>(n) << 40) | k;
  }

private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::uint64_t, Int> map_;
};

BasisMemo& memo() {
  static BasisMemo m;
  return m;
}

}  // namespace

Int basis_rec(long long n, std::uint64_t k) {
  if (n < 0) throw std::invalid_argument("basis_rec: negative order");
  if (n >= (1ll << 24) || k >= (1ull << 40))
    throw std::invalid_argument("basis_rec: argument too large to memoize");
  if (k == 0) return 1;
  const std::uint64_t key = BasisMemo::key(n, k);
  Int cached;
  if (memo().find(key, cached)) return cached;
  const auto [g, h] = g_h(k);
  const Int value = basis_rec(g, h) * binomial(n, g) - basis_rec(n, h);
  memo().store(key, value);
  return value;
}

bool identity_abab(long long n, std::uint64_t k) {
  if (k % 4 != 0)
    throw std::invalid_argument("identity_abab: k must be divisible by 4");
  if (n < 3 || n > 62 || k + 3 >= (1ull << (n - 1)))
    throw std::invalid_argument("identity_abab: k+3 must stay below 2^{n-1}");
  return basis_rec(n, k) - basis_rec(n, k + 1) + basis_rec(n, k + 2) -
             basis_rec(n, k + 3) ==
         0;
}

bool halfsum_check(long long n, int r) {
  if (r < 2 || r > n - 1)
    throw std::invalid_argument("halfsum_check: requires 2 <= r <= n-1");
  if (r > 30)
    throw resource_limit_error("halfsum_check: 2^r summands is out of reach");
  Int even_sum = 0, odd_sum = 0;
  for (std::uint64_t k = 0; k < (1ull << r); ++k) {
    if (k % 2 == 0)
      even_sum += basis_rec(n, k);
    else
      odd_sum += basis_rec(n, k);
  }
  const Int half = falling_factorial(n, r) / 2;
  return even_sum == half && odd_sum == half;
}

std::vector<Int> concat_basis(std::size_t limit) {
  std::vector<Int> out;
  out.reserve(limit);
  for (std::uint64_t k = 1; k <= limit; ++k) {
    const auto [g, h] = g_h(k);
    out.push_back(basis_rec(g, h));
  }
  return out;
}

std::vector<Int> basis_block(int n) {
  if (n < 1 || n > 40) throw std::invalid_argument("basis_block: order out of range");
  std::vector<Int> out(1ull << (n - 1));
  for (std::uint64_t k = 0; k < out.size(); ++k) out[k] = basis_rec(n, k);
  return out;
}

}  // namespace updown
