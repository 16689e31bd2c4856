#pragma once

#include "updown/numeric.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace updown {

/* One-line notation: word()[i] is the image of position i+1, values 1..n. */
class Permutation {
public:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n == 0) throw std::invalid_argument("Permutation: empty word");
    std::uint64_t seen = 0;
    for (int v : word_) {
      if (v < 1 || v > n || n > 64)
        throw std::invalid_argument("Permutation: value out of range");
      if (seen >> (v - 1) & 1)
        throw std::invalid_argument("Permutation: repeated value");
      seen |= 1ull << (v - 1);
    }
  }

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  /* 1-based position access. */
  int operator[](int pos) const { return word_[pos - 1]; }

  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> word_;
};

/* Identifies a permutation class by order and up-down position: the
 * (n-1)-digit binary expansion of k, most significant digit first, has
 * digit i equal to 1 exactly when the word ascends between positions i
 * and i+1.  n = 1 always has k = 0. */
struct UpDownIndex {
  int n = 0;
  std::uint64_t k = 0;
};

/* counts[i-1] = number of cycles of length i; sum of i*counts[i-1] = n. */
struct CycleType {
  std::vector<int> counts;
  int order() const { return static_cast<int>(counts.size()); }
  bool operator==(const CycleType&) const = default;
};

/* Ascent/descent word; entry i (0-based) is true when the permutation
 * ascends between positions i+1 and i+2. */
using PatternWord = std::vector<bool>;

inline std::uint64_t updown_index_of(std::span<const int> word) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    k = (k << 1) | static_cast<std::uint64_t>(word[i] < word[i + 1]);
  return k;
}

inline UpDownIndex updown_index(const Permutation& p) {
  return {p.size(), updown_index_of(p.word())};
}

inline void require_valid_index(const UpDownIndex& idx) {
  if (idx.n < 1 || idx.n > 64)
    throw std::invalid_argument("UpDownIndex: order out of range");
  if (idx.n < 64 && idx.k >> (idx.n - 1))
    throw std::invalid_argument("UpDownIndex: k out of range for order");
}

inline PatternWord pattern_of(const UpDownIndex& idx) {
  require_valid_index(idx);
  PatternWord w(static_cast<std::size_t>(idx.n) - 1);
  for (int i = 0; i < idx.n - 1; ++i)
    w[i] = (idx.k >> (idx.n - 2 - i)) & 1;
  return w;
}

inline std::uint64_t pattern_index(const PatternWord& w) {
  std::uint64_t k = 0;
  for (bool ascent : w) k = (k << 1) | static_cast<std::uint64_t>(ascent);
  return k;
}

/* Ascent first: 1 0 1 0 ... */
inline PatternWord alternating_pattern(int n) {
  if (n < 1) throw std::invalid_argument("alternating_pattern: order must be positive");
  PatternWord w(static_cast<std::size_t>(n) - 1);
  for (std::size_t i = 0; i < w.size(); i += 2) w[i] = true;
  return w;
}

/* Descent first: 0 1 0 1 ... */
inline PatternWord antialternating_pattern(int n) {
  if (n < 1) throw std::invalid_argument("antialternating_pattern: order must be positive");
  PatternWord w(static_cast<std::size_t>(n) - 1);
  for (std::size_t i = 1; i < w.size(); i += 2) w[i] = true;
  return w;
}

inline std::uint64_t alternating_index(int n) {
  return pattern_index(alternating_pattern(n));
}

inline std::uint64_t antialternating_index(int n) {
  return pattern_index(antialternating_pattern(n));
}

inline bool is_full_cycle(const Permutation& p) {
  const int n = p.size();
  int at = 1, steps = 0;
  do {
    at = p[at];
    ++steps;
  } while (at != 1 && steps <= n);
  return steps == n;
}

inline CycleType cycle_type(const Permutation& p) {
  const int n = p.size();
  CycleType t;
  t.counts.assign(n, 0);
  std::uint64_t seen = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen >> (s - 1) & 1) continue;
    int len = 0, at = s;
    do {
      seen |= 1ull << (at - 1);
      at = p[at];
      ++len;
    } while (at != s);
    ++t.counts[len - 1];
  }
  return t;
}

inline int fixed_point_count(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) c += (p[i] == i);
  return c;
}

/* Value complement i -> n+1-i; flips every ascent, so the up-down index
 * maps to 2^{n-1}-1-k. */
inline Permutation complement(const Permutation& p) {
  std::vector<int> w(p.word());
  for (int& v : w) v = p.size() + 1 - v;
  return Permutation(std::move(w));
}

inline UpDownIndex complement(const UpDownIndex& idx) {
  require_valid_index(idx);
  const std::uint64_t top = idx.n == 1 ? 0 : (1ull << (idx.n - 1)) - 1;
  return {idx.n, top - idx.k};
}

/* 0/1 restriction matrix in bitmask rows: allows(i, v) says value v may
 * be placed at position i.  Orders up to 62 only, which is far beyond
 * every enumeration this library will attempt. */
class PositionMask {
public:
  static PositionMask all(int n) {
    PositionMask m(n);
    std::fill(m.rows_.begin(), m.rows_.end(), (1ull << n) - 1);
    return m;
  }

  static PositionMask none(int n) { return PositionMask(n); }

  int order() const { return n_; }

  bool allows(int pos, int value) const {
    return rows_[pos - 1] >> (value - 1) & 1;
  }

  void set(int pos, int value, bool allowed) {
    if (allowed)
      rows_[pos - 1] |= 1ull << (value - 1);
    else
      rows_[pos - 1] &= ~(1ull << (value - 1));
  }

  std::uint64_t row(int pos) const { return rows_[pos - 1]; }

private:
  explicit PositionMask(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > 62)
      throw std::invalid_argument("PositionMask: order out of range");
  }

  int n_;
  std::vector<std::uint64_t> rows_;
};

/* Hard default cap on n! and (n-1)! scans; overridable per call. */
inline constexpr int kEnumerationCap = 12;

namespace detail {

inline std::uint64_t value_mask(int n) { return (1ull << n) - 1; }

/* Partial one-line word of a would-be full cycle.  The assigned edges
 * i -> word[i] form vertex-disjoint paths in the functional graph; a
 * candidate value whose path already ends at the position being filled
 * would close a cycle early and is rejected.  path_end_ is kept valid
 * at path starts, path_start_ at path ends; merges and undos are O(1).
 * Filling the last position cannot be premature: at that point only one
 * path remains and the final edge closes the full n-cycle. */
class CycleWalk {
public:
  explicit CycleWalk(int n)
      : n_(n),
        word_(static_cast<std::size_t>(n) + 1, 0),
        path_end_(static_cast<std::size_t>(n) + 1),
        path_start_(static_cast<std::size_t>(n) + 1) {
    for (int v = 0; v <= n; ++v) {
      path_end_[v] = v;
      path_start_[v] = v;
    }
  }

  int order() const { return n_; }
  int next_pos() const { return pos_; }
  bool complete() const { return pos_ > n_; }
  std::uint64_t used() const { return used_; }
  std::span<const int> word() const {
    return {word_.data() + 1, static_cast<std::size_t>(n_)};
  }

  bool admissible(int v) const {
    if (used_ >> (v - 1) & 1) return false;
    return pos_ == n_ || path_end_[v] != pos_;
  }

  /* Precondition: admissible(v). */
  void push(int v) {
    const int s = path_start_[pos_];
    const int e = path_end_[v];
    path_end_[s] = e;
    path_start_[e] = s;
    word_[pos_] = v;
    used_ |= 1ull << (v - 1);
    ++pos_;
  }

  void pop() {
    --pos_;
    const int v = word_[pos_];
    used_ &= ~(1ull << (v - 1));
    /* path_end_[v] was never touched while v sat mid-path, so it still
     * names the end of the piece that started at v. */
    const int e = path_end_[v];
    const int s = path_start_[e];
    path_end_[s] = pos_;
    path_start_[e] = v;
    word_[pos_] = 0;
  }

private:
  int n_;
  int pos_ = 1;
  std::uint64_t used_ = 0;
  std::vector<int> word_;
  std::vector<int> path_end_;
  std::vector<int> path_start_;
};

/* Visits every completion of the current walk in lexicographic order. */
template <class Leaf>
void run_cycle_walk(CycleWalk& w, Leaf&& leaf) {
  if (w.complete()) {
    leaf(w.word());
    return;
  }
  const std::uint64_t avail = ~w.used() & value_mask(w.order());
  for (std::uint64_t rest = avail; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest) + 1;
    if (!w.admissible(v)) continue;
    w.push(v);
    run_cycle_walk(w, leaf);
    w.pop();
  }
}

/* Backtracking over the permutations whose ascent/descent word equals a
 * fixed pattern.  Candidates at each position lie strictly above or below
 * the previous entry, so they are carved out of a bitmask and subtrees
 * that cannot match the pattern are never entered.  Never scans S_n. */
class PatternWalk {
public:
  PatternWalk(int n, const PatternWord& pattern, const PositionMask* allowed,
              bool fixed_point_free)
      : n_(n),
        word_(static_cast<std::size_t>(n) + 1, 0),
        ascent_(static_cast<std::size_t>(n), false),
        allowed_(allowed),
        fpf_(fixed_point_free) {
    for (int i = 1; i < n; ++i) ascent_[i] = pattern[i - 1];
  }

  int order() const { return n_; }
  int next_pos() const { return pos_; }
  bool complete() const { return pos_ > n_; }
  std::span<const int> word() const {
    return {word_.data() + 1, static_cast<std::size_t>(n_)};
  }

  std::uint64_t candidates() const {
    std::uint64_t avail = ~used_ & value_mask(n_);
    if (pos_ > 1) {
      const int prev = word_[pos_ - 1];
      if (ascent_[pos_ - 1])
        avail &= ~((1ull << prev) - 1);      /* values > prev */
      else
        avail &= (1ull << (prev - 1)) - 1;   /* values < prev */
    }
    if (allowed_) avail &= allowed_->row(pos_);
    if (fpf_) avail &= ~(1ull << (pos_ - 1));
    return avail;
  }

  void push(int v) {
    word_[pos_] = v;
    used_ |= 1ull << (v - 1);
    ++pos_;
  }

  void pop() {
    --pos_;
    used_ &= ~(1ull << (word_[pos_] - 1));
    word_[pos_] = 0;
  }

private:
  int n_;
  int pos_ = 1;
  std::uint64_t used_ = 0;
  std::vector<int> word_;
  std::vector<bool> ascent_;
  const PositionMask* allowed_;
  bool fpf_;
};

template <class Leaf>
void run_pattern_walk(PatternWalk& w, Leaf&& leaf) {
  if (w.complete()) {
    leaf(w.word());
    return;
  }
  for (std::uint64_t rest = w.candidates(); rest; rest &= rest - 1) {
    w.push(std::countr_zero(rest) + 1);
    run_pattern_walk(w, leaf);
    w.pop();
  }
}

inline void check_enum_cap(int n, int cap, bool force, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": order must be positive");
  if (n > 62) throw std::invalid_argument(std::string(what) + ": order too large");
  if (n > cap && !force)
    throw resource_limit_error(std::string(what) + ": order " + std::to_string(n) +
                               " exceeds the default cap of " + std::to_string(cap) +
                               " (pass force to override)");
}

}  // namespace detail

/* All n! words in lexicographic order.  visit receives the one-line word. */
template <class Visitor>
void enumerate_permutations(int n, Visitor&& visit, bool force = false) {
  detail::check_enum_cap(n, kEnumerationCap, force, "enumerate_permutations");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(std::span<const int>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

/* All (n-1)! full cycles, words visited in lexicographic order. */
template <class Visitor>
void enumerate_full_cycles(int n, Visitor&& visit, bool force = false) {
  detail::check_enum_cap(n, kEnumerationCap, force, "enumerate_full_cycles");
  if (n < 2)
    throw std::invalid_argument("enumerate_full_cycles: order must be at least 2");
  detail::CycleWalk w(n);
  detail::run_cycle_walk(w, [&](std::span<const int> word) { visit(word); });
}

struct MatchingQuery {
  UpDownIndex idx;
  const PositionMask* restriction = nullptr;  /* optional 0/1 position mask */
  bool fixed_point_free = false;
};

/* Permutations matching the query's up-down pattern (and mask / fixed-point
 * constraints), visited in lexicographic order.  Returns the count. */
template <class Visitor>
std::uint64_t enumerate_matching(const MatchingQuery& q, Visitor&& visit,
                                 bool force = false) {
  require_valid_index(q.idx);
  detail::check_enum_cap(q.idx.n, kEnumerationCap, force, "enumerate_matching");
  if (q.restriction && q.restriction->order() != q.idx.n)
    throw std::invalid_argument("enumerate_matching: restriction order mismatch");
  const PatternWord pattern = pattern_of(q.idx);
  detail::PatternWalk w(q.idx.n, pattern, q.restriction, q.fixed_point_free);
  std::uint64_t count = 0;
  detail::run_pattern_walk(w, [&](std::span<const int> word) {
    ++count;
    visit(word);
  });
  return count;
}

inline std::uint64_t count_matching(const MatchingQuery& q, bool force = false) {
  return enumerate_matching(q, [](std::span<const int>) {}, force);
}

}  // namespace updown
