#include "updown/indicator.hpp"

#include <algorithm>
#include <sstream>

#include <omp.h>

namespace updown {

namespace {

void trim(CycleTypePolynomial::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

int exps_weight(const CycleTypePolynomial::Exponents& e) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
  return w;
}

/* Canonical display order: highest variable first, then plain
 * lexicographic on the exponent vector. */
bool canonical_before(const CycleTypePolynomial::Exponents& a,
                      const CycleTypePolynomial::Exponents& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

}  // namespace

void CycleTypePolynomial::add_term(Exponents exps, const Int& coeff) {
  if (coeff == 0) return;
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("add_term: negative exponent");
  trim(exps);
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exps), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Int CycleTypePolynomial::coefficient(Exponents exps) const {
  trim(exps);
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

int CycleTypePolynomial::weight() const {
  if (terms_.empty()) return 0;
  const int w = exps_weight(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (exps_weight(e) != w)
      throw std::logic_error("weight: polynomial is not homogeneous");
  return w;
}

bool CycleTypePolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int w = exps_weight(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (exps_weight(e) != w) return false;
  return true;
}

Int CycleTypePolynomial::sum_of_coefficients() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

int CycleTypePolynomial::max_variable() const {
  int mv = 0;
  for (const auto& [e, c] : terms_) mv = std::max(mv, static_cast<int>(e.size()));
  return mv;
}

CycleTypePolynomial& CycleTypePolynomial::operator+=(const CycleTypePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CycleTypePolynomial& CycleTypePolynomial::operator-=(const CycleTypePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

std::vector<std::pair<CycleTypePolynomial::Exponents, Int>>
CycleTypePolynomial::ordered_terms() const {
  std::vector<std::pair<Exponents, Int>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return canonical_before(a.first, b.first); });
  return out;
}

std::string CycleTypePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first_line = true;
  for (const auto& [exps, coeff] : ordered_terms()) {
    if (!first_line) out << '\n';
    first_line = false;
    out << coeff;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      out << " t" << (i + 1);
      if (exps[i] != 1) out << '^' << exps[i];
    }
  }
  return out.str();
}

CycleTypePolynomial CycleTypePolynomial::parse(const std::string& text) {
  CycleTypePolynomial p;
  std::istringstream lines(text);
  std::string line;
  bool saw_term = false;
  while (std::getline(lines, line)) {
    std::istringstream in(line);
    Int coeff;
    if (!(in >> coeff)) {
      std::string rest;
      if (in.clear(), in >> rest)
        throw std::invalid_argument("polynomial parse: bad coefficient in '" + line + "'");
      continue;  /* blank line */
    }
    Exponents exps;
    std::string factor;
    while (in >> factor) {
      if (factor[0] != 't')
        throw std::invalid_argument("polynomial parse: bad factor '" + factor + "'");
      const auto caret = factor.find('^');
      const std::string var_part = factor.substr(1, caret == std::string::npos
                                                        ? std::string::npos
                                                        : caret - 1);
      const int var = std::stoi(var_part);
      const int exp = caret == std::string::npos
                          ? 1
                          : std::stoi(factor.substr(caret + 1));
      if (var < 1 || exp < 1)
        throw std::invalid_argument("polynomial parse: bad factor '" + factor + "'");
      if (static_cast<std::size_t>(var) > exps.size()) exps.resize(var, 0);
      exps[var - 1] += exp;
    }
    if (exps.empty() && coeff == 0) {
      saw_term = true;  /* the zero polynomial line */
      continue;
    }
    p.add_term(std::move(exps), coeff);
    saw_term = true;
  }
  if (!saw_term) throw std::invalid_argument("polynomial parse: empty input");
  return p;
}

namespace {

void check_indicator_cap(int n, bool force) {
  if (n < 1) throw std::invalid_argument("cyclic_indicator: order must be positive");
  if (n > 40) throw std::invalid_argument("cyclic_indicator: order too large");
  if (n > kIndicatorCap && !force)
    throw resource_limit_error("cyclic_indicator: order " + std::to_string(n) +
                               " exceeds the default cap of " + std::to_string(kIndicatorCap) +
                               " (pass force to override)");
}

PatternWord shape_pattern(int n, Zigzag shape) {
  return shape == Zigzag::alternating ? alternating_pattern(n)
                                      : antialternating_pattern(n);
}

/* Cycle type of a completed word, accumulated into a reused buffer. */
void accumulate_leaf(std::span<const int> word, std::vector<int>& scratch,
                     std::vector<char>& seen, CycleTypePolynomial& poly) {
  const int n = static_cast<int>(word.size());
  scratch.assign(n, 0);
  std::fill(seen.begin(), seen.end(), 0);
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    int len = 0, at = s;
    do {
      seen[at] = 1;
      at = word[at - 1];
      ++len;
    } while (at != s);
    ++scratch[len - 1];
  }
  poly.add_term(scratch, 1);
}

}  // namespace

namespace ref {

CycleTypePolynomial cyclic_indicator(const PositionMask& allowed, Zigzag shape,
                                     bool force) {
  const int n = allowed.order();
  check_indicator_cap(n, force);
  detail::PatternWalk w(n, shape_pattern(n, shape), &allowed, false);
  CycleTypePolynomial poly;
  std::vector<int> scratch;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  detail::run_pattern_walk(w, [&](std::span<const int> word) {
    accumulate_leaf(word, scratch, seen, poly);
  });
  return poly;
}

}  // namespace ref

CycleTypePolynomial cyclic_indicator(const PositionMask& allowed, Zigzag shape,
                                     bool force) {
  const int n = allowed.order();
  check_indicator_cap(n, force);
  if (n < 4) return ref::cyclic_indicator(allowed, shape, force);

  const PatternWord pattern = shape_pattern(n, shape);
  /* Workload split on the first two word entries. */
  std::vector<std::pair<int, int>> seeds;
  {
    detail::PatternWalk w(n, pattern, &allowed, false);
    for (std::uint64_t r1 = w.candidates(); r1; r1 &= r1 - 1) {
      const int v1 = std::countr_zero(r1) + 1;
      w.push(v1);
      for (std::uint64_t r2 = w.candidates(); r2; r2 &= r2 - 1)
        seeds.emplace_back(v1, std::countr_zero(r2) + 1);
      w.pop();
    }
  }

  CycleTypePolynomial poly;
#pragma omp parallel
  {
    detail::PatternWalk w(n, pattern, &allowed, false);
    CycleTypePolynomial local;
    std::vector<int> scratch;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
#pragma omp for schedule(dynamic) nowait
    for (std::size_t t = 0; t < seeds.size(); ++t) {
      w.push(seeds[t].first);
      w.push(seeds[t].second);
      detail::run_pattern_walk(w, [&](std::span<const int> word) {
        accumulate_leaf(word, scratch, seen, local);
      });
      w.pop();
      w.pop();
    }
#pragma omp critical
    poly += local;
  }
  return poly;
}

CycleTypePolynomial cyclic_indicator(int n, Zigzag shape, bool force) {
  check_indicator_cap(n, force);
  return cyclic_indicator(PositionMask::all(n), shape, force);
}

CycleTypePolynomial r_poly(int n, bool force) {
  return cyclic_indicator(n, Zigzag::alternating, force) -
         cyclic_indicator(n, Zigzag::antialternating, force);
}

PolyDivision quotient_by_factor(const CycleTypePolynomial& p) {
  PolyDivision out;
  CycleTypePolynomial rem = p;
  for (;;) {
    /* Highest t_1-degree term still at 2 or above. */
    const CycleTypePolynomial::Exponents* lead = nullptr;
    for (const auto& [e, c] : rem.terms()) {
      if (e.empty() || e[0] < 2) continue;
      if (!lead || e[0] > (*lead)[0]) lead = &e;
    }
    if (!lead) break;
    CycleTypePolynomial::Exponents q = *lead;
    const Int coeff = rem.terms().at(*lead);
    q[0] -= 2;
    out.quotient.add_term(q, coeff);
    /* rem -= (t_1^2 - t_2) * coeff * t^q */
    CycleTypePolynomial::Exponents with_t2 = q;
    if (with_t2.size() < 2) with_t2.resize(2, 0);
    with_t2[1] += 1;
    rem.add_term(*lead, -coeff);
    rem.add_term(std::move(with_t2), coeff);
  }
  out.remainder = std::move(rem);
  return out;
}

Int specialize(const CycleTypePolynomial& p, const std::map<int, Int>& assignment) {
  Int total = 0;
  for (const auto& [exps, coeff] : p.terms()) {
    Int term = coeff;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      const auto it = assignment.find(static_cast<int>(i + 1));
      if (it == assignment.end())
        throw std::invalid_argument("specialize: variable t" + std::to_string(i + 1) +
                                    " is unassigned");
      for (int rep = 0; rep < exps[i]; ++rep) term *= it->second;
    }
    total += term;
  }
  return total;
}

bool eq47_check(int even_n, bool force) {
  if (even_n < 2 || even_n % 2 != 0)
    throw std::invalid_argument("eq47_check: order must be even and positive");
  const CycleTypePolynomial r = r_poly(even_n, force);
  if (!quotient_by_factor(r).remainder.is_zero()) return false;

  /* Substituting t_1 = t and t_2 = t^2 kills the factor; the remaining
   * variables get distinct primes so a surviving term could not hide. */
  std::vector<int> primes;
  for (int c = 5; static_cast<int>(primes.size()) < even_n; ++c) {
    bool is_prime = true;
    for (int d = 2; d * d <= c; ++d)
      if (c % d == 0) { is_prime = false; break; }
    if (is_prime) primes.push_back(c);
  }
  for (int t = -2; t <= 3; ++t) {
    std::map<int, Int> assignment;
    assignment[1] = t;
    assignment[2] = Int(t) * t;
    for (int v = 3; v <= even_n; ++v) assignment[v] = primes[v - 3];
    if (specialize(r, assignment) != 0) return false;
  }
  return true;
}

std::vector<Int> euler_numbers(int count) {
  if (count < 1) throw std::invalid_argument("euler_numbers: count must be positive");
  std::vector<Int> a(static_cast<std::size_t>(count) + 1);
  /* Boustrophedon rows: row n entry k counts zigzags of n+... the classic
   * triangle with T(n, k) = T(n, k-1) + T(n-1, n-k); a_n = T(n, n). */
  std::vector<Int> prev{Int(1)}, cur;
  for (int n = 1; n <= count; ++n) {
    cur.assign(static_cast<std::size_t>(n) + 1, Int(0));
    for (int k = 1; k <= n; ++k) cur[k] = cur[k - 1] + prev[n - k];
    a[n] = cur[n];
    prev = cur;
  }
  a.erase(a.begin());
  return a;
}

Int alt_full_cycles(int n, bool force) {
  const CycleTypePolynomial ind = cyclic_indicator(n, Zigzag::alternating, force);
  CycleTypePolynomial::Exponents target(static_cast<std::size_t>(n), 0);
  target[n - 1] = 1;
  return ind.coefficient(std::move(target));
}

ZigzagDerangements alt_derangements(int n, bool force) {
  std::map<int, Int> at_zero;
  at_zero[1] = 0;
  for (int v = 2; v <= n; ++v) at_zero[v] = 1;
  ZigzagDerangements out;
  out.alternating = specialize(cyclic_indicator(n, Zigzag::alternating, force), at_zero);
  out.antialternating =
      specialize(cyclic_indicator(n, Zigzag::antialternating, force), at_zero);
  return out;
}

RationalBracket RationalBracket::e_enclosure(int terms) {
  if (terms < 1) throw std::invalid_argument("e_enclosure: need at least one term");
  RationalBracket b;
  Int fact = 1;
  b.low = 1;
  for (int j = 1; j <= terms; ++j) {
    fact *= j;
    b.low += Rational(Int(1), fact);
  }
  /* The tail sum_{j>K} 1/j! is strictly below 1/(K*K!). */
  b.high = b.low + Rational(Int(1), Int(terms) * fact);
  return b;
}

std::vector<RatioRow> ratio_rows_from(const std::vector<Int>& a,
                                      const std::vector<Int>& b,
                                      const std::vector<Int>& bstar) {
  if (a.size() != b.size() || a.size() != bstar.size())
    throw std::invalid_argument("ratio_rows_from: sequence length mismatch");
  const RationalBracket e = RationalBracket::e_enclosure();
  std::vector<RatioRow> rows;
  for (std::size_t i = 3; i < a.size(); i += 2) {  /* n = 4, 6, 8, ... */
    const int n = static_cast<int>(i) + 1;
    if (b[i] == 0 || bstar[i] == 0)
      throw std::invalid_argument("ratio_rows_from: zero denominator at n=" +
                                  std::to_string(n));
    RatioRow row;
    row.n = n;
    row.a = a[i];
    row.b = b[i];
    row.bstar = bstar[i];
    row.lower = Rational(a[i]) / bstar[i];
    row.upper = Rational(a[i]) / b[i];
    /* low < e < high makes both verdicts sound. */
    row.lower_below_e = row.lower <= e.low;
    row.upper_above_e = row.upper >= e.high;
    if (!rows.empty()) {
      row.lower_increased = row.lower > rows.back().lower;
      row.upper_decreased = row.upper < rows.back().upper;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RatioRow> ratio_report(int n_max, bool force) {
  if (n_max < 4) throw std::invalid_argument("ratio_report: need n_max >= 4");
  std::vector<Int> a = euler_numbers(n_max);
  std::vector<Int> b(static_cast<std::size_t>(n_max), 0);
  std::vector<Int> bstar(static_cast<std::size_t>(n_max), 0);
  for (int n = 4; n <= n_max; n += 2) {
    const ZigzagDerangements d = alt_derangements(n, force);
    b[n - 1] = d.alternating;
    bstar[n - 1] = d.antialternating;
  }
  return ratio_rows_from(a, b, bstar);
}

QuotientExtreme max_quotient_coeff(int even_n, bool force) {
  if (even_n < 2 || even_n % 2 != 0)
    throw std::invalid_argument("max_quotient_coeff: order must be even and positive");
  const PolyDivision division = quotient_by_factor(r_poly(even_n, force));
  if (!division.remainder.is_zero())
    throw std::runtime_error("max_quotient_coeff: quotient has a remainder");
  QuotientExtreme out;
  out.coefficient = 0;
  for (const auto& [e, c] : division.quotient.terms()) {
    if (c > out.coefficient) {
      out.coefficient = c;
      out.monomial = e;
    }
  }
  if (even_n >= 4) {
    CycleTypePolynomial::Exponents expected(static_cast<std::size_t>(even_n) - 3, 0);
    expected[0] = 1;
    expected[expected.size() - 1] += 1;  /* folds t_1 * t_1 into t_1^2 when 2n = 4 */
    out.is_t1_t2nm3 = out.monomial == expected;
  } else {
    out.is_t1_t2nm3 = false;
  }
  return out;
}

Int coeff_group_sum(const CycleTypePolynomial& p, const MonomialSelector& sel) {
  Int total = 0;
  for (const auto& [exps, coeff] : p.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < exps.size() && match; ++i) {
      const int var = static_cast<int>(i + 1);
      const auto it = sel.fixed.find(var);
      if (it != sel.fixed.end()) {
        match = (exps[i] == it->second);
      } else if (!sel.all_free && !sel.free_vars.count(var)) {
        match = (exps[i] == 0);
      }
    }
    /* Fixed exponents on variables beyond the trimmed vector mean 0. */
    for (const auto& [var, want] : sel.fixed) {
      if (static_cast<std::size_t>(var) > exps.size() && want != 0) match = false;
    }
    if (match) total += coeff;
  }
  return total;
}

}  // namespace updown
