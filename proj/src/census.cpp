#include "updown/census.hpp"

#include "updown/basis.hpp"
#include "updown/permutation.hpp"

#include <omp.h>

namespace updown {

std::uint64_t CensusBlock::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts) t += c;
  return t;
}

namespace {

void check_census_cap(int n, int cap, bool force, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": order must be positive");
  if (n > 40) throw std::invalid_argument(std::string(what) + ": order too large");
  if (n > cap && !force)
    throw resource_limit_error(std::string(what) + ": order " + std::to_string(n) +
                               " exceeds the default cap of " + std::to_string(cap) +
                               " (pass force to override)");
}

std::vector<std::pair<int, int>> cycle_prefixes(int n) {
  std::vector<std::pair<int, int>> out;
  detail::CycleWalk w(n);
  for (int v1 = 1; v1 <= n; ++v1) {
    if (!w.admissible(v1)) continue;
    w.push(v1);
    for (int v2 = 1; v2 <= n; ++v2)
      if (w.admissible(v2)) out.emplace_back(v1, v2);
    w.pop();
  }
  return out;
}

}  // namespace

namespace ref {

CensusBlock full_cycle_block(int n, bool force) {
  check_census_cap(n, kCycleCensusCap, force, "full_cycle_block");
  CensusBlock b;
  b.n = n;
  b.counts.assign(1ull << (n - 1), 0);
  if (n == 1) {
    b.counts[0] = 1;
    return b;
  }
  enumerate_full_cycles(n, [&](std::span<const int> w) {
    ++b.counts[updown_index_of(w)];
  }, force);
  return b;
}

CensusBlock derangement_block(int n, bool force) {
  check_census_cap(n, kDerangementCensusCap, force, "derangement_block");
  CensusBlock b;
  b.n = n;
  b.counts.assign(1ull << (n - 1), 0);
  for (std::uint64_t k = 0; k < b.counts.size(); ++k) {
    MatchingQuery q;
    q.idx = {n, k};
    q.fixed_point_free = true;
    b.counts[k] = count_matching(q, force);
  }
  return b;
}

}  // namespace ref

CensusBlock full_cycle_block(int n, bool force) {
  check_census_cap(n, kCycleCensusCap, force, "full_cycle_block");
  if (n < 4) return ref::full_cycle_block(n, force);

  CensusBlock b;
  b.n = n;
  b.counts.assign(1ull << (n - 1), 0);
  const auto seeds = cycle_prefixes(n);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(b.counts.size(), 0);
    detail::CycleWalk w(n);
#pragma omp for schedule(dynamic) nowait
    for (std::size_t t = 0; t < seeds.size(); ++t) {
      w.push(seeds[t].first);
      w.push(seeds[t].second);
      detail::run_cycle_walk(w, [&](std::span<const int> word) {
        ++local[updown_index_of(word)];
      });
      w.pop();
      w.pop();
    }
#pragma omp critical
    for (std::size_t i = 0; i < local.size(); ++i) b.counts[i] += local[i];
  }
  return b;
}

CensusBlock derangement_block(int n, bool force) {
  check_census_cap(n, kDerangementCensusCap, force, "derangement_block");
  CensusBlock b;
  b.n = n;
  b.counts.assign(1ull << (n - 1), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::uint64_t k = 0; k < (1ull << (n - 1)); ++k) {
    MatchingQuery q;
    q.idx = {n, k};
    q.fixed_point_free = true;
    b.counts[k] = count_matching(q, force);
  }
  return b;
}

Rational rhs_conjecture2(int n, std::uint64_t k) {
  if (n < 1) throw std::invalid_argument("rhs_conjecture2: order must be positive");
  return Rational(basis_rec(n, k) - thue_morse(k)) / n;
}

int smallest_prime_factor(int n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_factor: n must be at least 2");
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

bool spf_condition(int n, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("spf_condition: k must be positive");
  if (n < 3) throw std::invalid_argument("spf_condition: order must be at least 3");
  return smallest_prime_factor(n) > static_cast<int>(std::bit_width(k));
}

Conjecture2Report check_conjecture2(int n, bool force) {
  if (n < 3) throw std::invalid_argument("check_conjecture2: order must be at least 3");
  const CensusBlock block = full_cycle_block(n, force);
  Conjecture2Report report;
  report.n = n;
  report.conditional_equalities_hold = true;
  report.conditional_rhs_integral = true;
  for (std::uint64_t k = 0; k < block.counts.size(); ++k) {
    Conjecture2Row row;
    row.k = k;
    row.condition = (k > 0) && spf_condition(n, k);
    row.count = block.counts[k];
    row.rhs = rhs_conjecture2(n, k);
    row.residual = Rational(row.count) - row.rhs;
    const Int reduced = basis_rec(n, k) - thue_morse(k);
    if (reduced != 0)
      row.ratio = Rational(Int(row.count) * n) / reduced;
    if (row.condition) {
      if (row.residual != 0) report.conditional_equalities_hold = false;
      if (denominator(row.rhs) != 1) report.conditional_rhs_integral = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<Eq21Row> check_eq21(int n, bool force) {
  if (n < 3) throw std::invalid_argument("check_eq21: order must be at least 3");
  const CensusBlock block = full_cycle_block(n, force);
  std::vector<Eq21Row> rows;
  for (std::uint64_t k = 0; k + 3 < block.counts.size(); k += 4) {
    const auto& c = block.counts;
    const Int lhs = Int(c[k]) - Int(c[k + 1]) + Int(c[k + 2]) - Int(c[k + 3]);
    rows.push_back({k, lhs == 0});
  }
  return rows;
}

bool symmetry_check(const CensusBlock& b) {
  const std::size_t size = b.counts.size();
  for (std::size_t k = 0; k < size; ++k)
    if (b.counts[k] != b.counts[size - 1 - k]) return false;
  return true;
}

bool boundary_zeros(const CensusBlock& b) {
  return b.counts.front() == 0 && b.counts.back() == 0;
}

namespace {

std::vector<std::uint64_t> concat_blocks(std::size_t limit, bool force,
                                         CensusBlock (*block_fn)(int, bool)) {
  std::vector<std::uint64_t> out;
  out.reserve(limit);
  for (int n = 1; out.size() < limit; ++n) {
    const CensusBlock b = block_fn(n, force);
    for (std::uint64_t c : b.counts) {
      out.push_back(c);
      if (out.size() == limit) break;
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> concat_cycles(std::size_t limit, bool force) {
  return concat_blocks(limit, force, &full_cycle_block);
}

std::vector<std::uint64_t> concat_derangements(std::size_t limit, bool force) {
  return concat_blocks(limit, force, &derangement_block);
}

bool primality_signal(int n, bool force) {
  for (const Eq21Row& row : check_eq21(n, force))
    if (!row.holds) return false;
  return true;
}

}  // namespace updown
