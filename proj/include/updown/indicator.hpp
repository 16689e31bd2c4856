#pragma once

#include "updown/numeric.hpp"
#include "updown/permutation.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace updown {

/* Polynomial in variables t_1, t_2, ... with integer coefficients; terms
 * are keyed by exponent vectors (e_1, e_2, ..., trailing zeros trimmed).
 * Indicator polynomials are weight-homogeneous: sum of i*e_i is the same
 * for every term.
 *
 * Canonical term order, used both for display and for the fixture text
 * format: largest variable index present, descending; ties broken by
 * ascending lexicographic order on the exponent vector. */
class CycleTypePolynomial {
public:
  using Exponents = std::vector<int>;

  CycleTypePolynomial() = default;

  /* Adds coeff * t^exps; cancellation may erase the term. */
  void add_term(Exponents exps, const Int& coeff);

  Int coefficient(Exponents exps) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }

  /* Weight of the (homogeneous) polynomial; 0 for the zero polynomial.
   * Throws if terms disagree. */
  int weight() const;
  bool is_homogeneous() const;

  Int sum_of_coefficients() const;

  /* Largest variable index appearing with a positive exponent. */
  int max_variable() const;

  CycleTypePolynomial& operator+=(const CycleTypePolynomial& o);
  CycleTypePolynomial& operator-=(const CycleTypePolynomial& o);
  friend CycleTypePolynomial operator+(CycleTypePolynomial a, const CycleTypePolynomial& b) {
    return a += b;
  }
  friend CycleTypePolynomial operator-(CycleTypePolynomial a, const CycleTypePolynomial& b) {
    return a -= b;
  }
  bool operator==(const CycleTypePolynomial&) const = default;

  /* Terms in canonical order. */
  std::vector<std::pair<Exponents, Int>> ordered_terms() const;

  /* One term per line, "coeff t1^e1 t2 ...", exponent 1 left implicit,
   * zero exponents omitted; the zero polynomial is the single line "0".
   * parse() accepts exactly what str() emits (round-trip safe). */
  std::string str() const;
  static CycleTypePolynomial parse(const std::string& text);

private:
  std::map<Exponents, Int> terms_;
};

enum class Zigzag { alternating, antialternating };

inline constexpr int kIndicatorCap = 12;

/* Sum over the shape-matching permutations sigma allowed by the mask of
 * the monomial t_1^{c_1(sigma)} t_2^{c_2(sigma)} ...; grown by pattern-
 * pruned backtracking, never a scan of S_n. */
CycleTypePolynomial cyclic_indicator(const PositionMask& allowed, Zigzag shape,
                                     bool force = false);
/* Unrestricted variant. */
CycleTypePolynomial cyclic_indicator(int n, Zigzag shape, bool force = false);

namespace ref {
CycleTypePolynomial cyclic_indicator(const PositionMask& allowed, Zigzag shape,
                                     bool force = false);
}  // namespace ref

/* Alternating minus antialternating indicator of the unrestricted order-n
 * problem; identically zero for odd n. */
CycleTypePolynomial r_poly(int n, bool force = false);

struct PolyDivision {
  CycleTypePolynomial quotient;
  CycleTypePolynomial remainder;  /* t_1-degree at most 1 */
};

/* Exact division by t_1^2 - t_2, monic in t_1; a nonzero remainder means
 * the divisor does not divide the input. */
PolyDivision quotient_by_factor(const CycleTypePolynomial& p);

/* Evaluates with the given variable values; every variable appearing in
 * the polynomial must be assigned. */
Int specialize(const CycleTypePolynomial& p, const std::map<int, Int>& assignment);

/* Divisibility of r_poly(even_n) by t_1^2 - t_2, plus spot substitutions
 * t_1 = t, t_2 = t^2 (the rest held at distinct primes) for small t. */
bool eq47_check(int even_n, bool force = false);

/* a_1..a_count by the boustrophedon recurrence: a_n counts the zigzag
 * permutations of n of either fixed shape (the two shapes agree). */
std::vector<Int> euler_numbers(int count);

/* Coefficient of the bare t_n monomial in the alternating indicator:
 * the number of alternating full cycles. */
Int alt_full_cycles(int n, bool force = false);

/* Fixed-point-free zigzag counts: the indicator specialized at t_1 = 0,
 * every other variable 1, for both shapes. */
struct ZigzagDerangements {
  Int alternating;      /* b_n  */
  Int antialternating;  /* b*_n */
};

ZigzagDerangements alt_derangements(int n, bool force = false);

/* Exact rational enclosure low < e < high with width 1/(terms * terms!). */
struct RationalBracket {
  Rational low;
  Rational high;
  static RationalBracket e_enclosure(int terms = 15);
};

struct RatioRow {
  int n = 0;  /* even */
  Int a, b, bstar;
  Rational lower;            /* a/bstar */
  Rational upper;            /* a/b     */
  bool lower_below_e = false;
  bool upper_above_e = false;
  bool lower_increased = false;  /* versus previous even row */
  bool upper_decreased = false;
};

/* Rows for even n from 4 up to n_max, with strict-inequality verdicts
 * against the e enclosure and monotonicity flags. */
std::vector<RatioRow> ratio_report(int n_max, bool force = false);

/* Same verdict arithmetic over caller-supplied sequences a_1..a_N (and b,
 * b* of the same length). */
std::vector<RatioRow> ratio_rows_from(const std::vector<Int>& a,
                                      const std::vector<Int>& b,
                                      const std::vector<Int>& bstar);

struct QuotientExtreme {
  Int coefficient;                /* 0 when the quotient is zero */
  std::vector<int> monomial;      /* exponent vector, empty for zero */
  bool is_t1_t2nm3 = false;       /* monomial == t_1 * t_{2n-3} */
};

/* Largest coefficient of r_poly(even_n) / (t_1^2 - t_2). */
QuotientExtreme max_quotient_coeff(int even_n, bool force = false);

/* Selects monomials by exact exponents on `fixed` variables, anything on
 * `free_vars` (or on all variables when all_free), zero elsewhere. */
struct MonomialSelector {
  std::map<int, int> fixed;
  std::set<int> free_vars;
  bool all_free = false;
};

Int coeff_group_sum(const CycleTypePolynomial& p, const MonomialSelector& sel);

}  // namespace updown
