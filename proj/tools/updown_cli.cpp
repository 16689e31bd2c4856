#include "CLI11.hpp"

#include "updown/basis.hpp"
#include "updown/census.hpp"
#include "updown/indicator.hpp"
#include "updown/matrix.hpp"
#include "updown/verify.hpp"

#include <omp.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using updown::CycleTypePolynomial;
using updown::Int;
using updown::IntMatrix;

IntMatrix read_matrix(const std::string& path) {
  if (path == "-") return IntMatrix::read(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  return IntMatrix::read(in);
}

/* Plain output mirrors the comma-separated prefixes the fixtures use, so
 * the two can be diffed directly. */
template <class Seq>
void print_joined(const Seq& values) {
  bool first = true;
  for (const auto& v : values) {
    if (!first) std::cout << ',';
    first = false;
    std::cout << v;
  }
  std::cout << '\n';
}

template <class Seq>
void print_sequence(const Seq& values, bool csv) {
  if (!csv) {
    print_joined(values);
    return;
  }
  std::cout << "index,value\n";
  std::size_t i = 0;
  for (const auto& v : values) std::cout << ++i << ',' << v << '\n';
}

template <class Seq>
void print_block(int n, const Seq& counts, bool csv) {
  if (!csv) {
    print_joined(counts);
    return;
  }
  std::cout << "n,k,count\n";
  std::size_t k = 0;
  for (const auto& c : counts) std::cout << n << ',' << k++ << ',' << c << '\n';
}

void print_poly(const CycleTypePolynomial& p, bool csv) {
  if (!csv) {
    std::cout << p.str() << '\n';
    return;
  }
  std::cout << "coefficient,monomial\n";
  if (p.is_zero()) return;
  std::istringstream lines(p.str());
  std::string line;
  while (std::getline(lines, line)) {
    const auto space = line.find(' ');
    if (space == std::string::npos)
      std::cout << line << ",1\n";
    else
      std::cout << line.substr(0, space) << ',' << line.substr(space + 1) << '\n';
  }
}

int run_basis(long long n, std::uint64_t k, bool csv) {
  const Int rec = updown::basis_rec(n, k);
  const Int det = updown::basis_det(n, k);
  const Int sum = updown::basis_sum_t(n, k);
  bool ok = rec == det && det == sum;
  if (ok && k > 0 && n >= updown::decompose(k).t.front())
    ok = updown::basis_sum_s(n, k) == rec;
  if (!ok) {
    std::cerr << "evaluator disagreement at n=" << n << " k=" << k << ": rec=" << rec
              << " det=" << det << " sum_t=" << sum << "\n";
    return 1;
  }
  if (csv)
    std::cout << "n,k,value\n" << n << ',' << k << ',' << rec << '\n';
  else
    std::cout << rec << '\n';
  return 0;
}

int run_matrix(const std::string& op, const std::string& path, bool csv, bool force) {
  const IntMatrix m = read_matrix(path);
  Int value;
  if (op == "perf")
    value = updown::perf(m, force);
  else if (op == "per")
    value = updown::permanent(m, force);
  else
    value = updown::determinant(m);
  if (csv)
    std::cout << "op,order,value\n" << op << ',' << m.order() << ',' << value << '\n';
  else
    std::cout << value << '\n';
  return 0;
}

int run_conj1(int n, int k, bool has_k, bool csv, bool force) {
  if (n < 3) throw std::invalid_argument("conj1: order must be at least 3");
  std::vector<updown::Conjecture1Result> rows;
  if (has_k)
    rows.push_back(updown::conjecture1_check(n, k, force));
  else
    for (int j = 1; j < n; ++j) rows.push_back(updown::conjecture1_check(n, j, force));
  if (csv) std::cout << "n,k,lhs,rhs,equal\n";
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.equal;
    if (csv)
      std::cout << r.n << ',' << r.k << ',' << r.lhs << ',' << r.rhs << ','
                << (r.equal ? 1 : 0) << '\n';
    else
      std::cout << "k=" << r.k << " lhs=" << r.lhs << " rhs=" << r.rhs
                << (r.equal ? " ok" : " MISMATCH") << '\n';
  }
  return all ? 0 : 1;
}

int run_conj2(int n, bool csv, bool force) {
  const auto report = updown::check_conjecture2(n, force);
  if (csv) std::cout << "n,k,condition,count,rhs,residual,ratio\n";
  for (const auto& r : report.rows) {
    if (csv) {
      std::cout << report.n << ',' << r.k << ',' << (r.condition ? 1 : 0) << ','
                << r.count << ',' << r.rhs << ',' << r.residual << ',';
      if (r.ratio) std::cout << *r.ratio;
      std::cout << '\n';
    } else {
      std::cout << "k=" << r.k << " condition=" << (r.condition ? 1 : 0)
                << " count=" << r.count << " rhs=" << r.rhs << " residual=" << r.residual;
      if (r.ratio) std::cout << " ratio=" << *r.ratio;
      std::cout << '\n';
    }
  }
  if (!csv)
    std::cout << "conditional equalities hold: "
              << (report.conditional_equalities_hold ? "yes" : "no")
              << "\nconditional rhs integral: "
              << (report.conditional_rhs_integral ? "yes" : "no") << '\n';
  return report.conditional_equalities_hold && report.conditional_rhs_integral ? 0 : 1;
}

int run_eq21(int n, bool csv, bool force) {
  const auto rows = updown::check_eq21(n, force);
  if (csv) std::cout << "n,k,holds\n";
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.holds;
    if (csv)
      std::cout << n << ',' << r.k << ',' << (r.holds ? 1 : 0) << '\n';
    else
      std::cout << "k=" << r.k << (r.holds ? " holds" : " FAILS") << '\n';
  }
  return all ? 0 : 1;
}

int run_indicator(int n, const std::string& shape, const std::string& mask_path, bool csv,
                  bool force) {
  const auto zig = shape == "alternating" ? updown::Zigzag::alternating
                                          : updown::Zigzag::antialternating;
  CycleTypePolynomial p;
  if (mask_path.empty()) {
    p = updown::cyclic_indicator(n, zig, force);
  } else {
    const auto mask = read_matrix(mask_path).to_mask();
    if (mask.order() != n)
      throw std::invalid_argument("indicator: mask order does not match --n");
    p = updown::cyclic_indicator(mask, zig, force);
  }
  print_poly(p, csv);
  return 0;
}

int run_rpoly(int n, bool quotient, bool csv, bool force) {
  const auto r = updown::r_poly(n, force);
  if (!quotient) {
    print_poly(r, csv);
    return 0;
  }
  const auto div = updown::quotient_by_factor(r);
  if (!div.remainder.is_zero()) {
    std::cerr << "t1^2 - t2 does not divide the polynomial; remainder:\n"
              << div.remainder.str() << "\n";
    return 1;
  }
  print_poly(div.quotient, csv);
  return 0;
}

int run_ratios(int n_max, bool csv, bool force) {
  const auto rows = updown::ratio_report(n_max, force);
  if (csv)
    std::cout << "n,a,b,bstar,lower,upper,lower_below_e,upper_above_e,"
                 "lower_increased,upper_decreased\n";
  bool ok = true;
  for (const auto& r : rows) {
    if (r.n >= 6) ok = ok && r.lower_below_e && r.upper_above_e && r.lower_increased;
    if (r.n >= 8) ok = ok && r.upper_decreased;
    if (csv)
      std::cout << r.n << ',' << r.a << ',' << r.b << ',' << r.bstar << ',' << r.lower
                << ',' << r.upper << ',' << r.lower_below_e << ',' << r.upper_above_e
                << ',' << r.lower_increased << ',' << r.upper_decreased << '\n';
    else
      std::cout << "n=" << r.n << " a=" << r.a << " b=" << r.b << " b*=" << r.bstar
                << " lower=" << r.lower << " upper=" << r.upper
                << " lower_below_e=" << r.lower_below_e
                << " upper_above_e=" << r.upper_above_e
                << " lower_increased=" << r.lower_increased
                << " upper_decreased=" << r.upper_decreased << '\n';
  }
  return ok ? 0 : 1;
}

int run_sequences(int eq, std::size_t limit, bool csv, bool force) {
  if (eq == 23)
    print_sequence(updown::concat_basis(limit), csv);
  else if (eq == 41)
    print_sequence(updown::concat_derangements(limit, force), csv);
  else
    print_sequence(updown::concat_cycles(limit, force), csv);
  return 0;
}

int run_verify(const std::string& fixtures, bool extended) {
  updown::VerifyOptions opts;
  opts.fixtures_dir = fixtures;
  opts.extended = extended;
  const auto results = updown::run_acceptance(opts);
  for (const auto& r : results)
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
  return updown::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact permutation statistics by up-down pattern: census blocks, cycle\n"
               "permanents, indicator polynomials, and the fixture verification suite"};
  app.require_subcommand(1);

  std::string format = "plain";
  int jobs = 0;
  bool force = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "OpenMP thread count")->check(CLI::PositiveNumber);
  app.add_flag("--force", force, "lift the resource caps (prints a warning)");

  long long basis_n = 0;
  std::uint64_t basis_k = 0;
  auto* basis_cmd =
      app.add_subcommand("basis", "permutations of n with up-down index k, evaluators cross-checked");
  basis_cmd->fallthrough();
  basis_cmd->add_option("--n", basis_n, "order")->required()->check(CLI::NonNegativeNumber);
  basis_cmd->add_option("--k", basis_k, "up-down index")->required();

  int block_n = 0;
  bool want_perms = false, want_cycles = false, want_der = false;
  auto* block_cmd = app.add_subcommand("block", "one census block, all up-down indices in order");
  block_cmd->fallthrough();
  block_cmd->add_option("--n", block_n, "order")->required()->check(CLI::PositiveNumber);
  auto* block_class = block_cmd->add_option_group("class", "which permutations to count");
  block_class->add_flag("--perms", want_perms, "all permutations");
  block_class->add_flag("--cycles", want_cycles, "full cycles");
  block_class->add_flag("--derangements", want_der, "fixed-point-free permutations");
  block_class->require_option(1);

  std::string perf_file, per_file, det_file;
  auto* perf_cmd = app.add_subcommand("perf", "cycle permanent of a matrix");
  perf_cmd->fallthrough();
  perf_cmd->add_option("--file", perf_file, "matrix file, - for stdin")->required();
  auto* per_cmd = app.add_subcommand("per", "permanent of a matrix");
  per_cmd->fallthrough();
  per_cmd->add_option("--file", per_file, "matrix file, - for stdin")->required();
  auto* det_cmd = app.add_subcommand("det", "determinant of a matrix");
  det_cmd->fallthrough();
  det_cmd->add_option("--file", det_file, "matrix file, - for stdin")->required();

  int conj1_n = 0, conj1_k = 0;
  auto* conj1_cmd =
      app.add_subcommand("conj1", "banded cycle permanent against the shifted permanent");
  conj1_cmd->fallthrough();
  conj1_cmd->add_option("--n", conj1_n, "order")->required();
  auto* conj1_k_opt = conj1_cmd->add_option("--k", conj1_k, "band count; default sweeps 1..n-1");

  int conj2_n = 0;
  auto* conj2_cmd =
      app.add_subcommand("conj2", "cycle census against the closed form on the conditioned rows");
  conj2_cmd->fallthrough();
  conj2_cmd->add_option("--n", conj2_n, "order")->required()->check(CLI::PositiveNumber);

  int eq21_n = 0;
  auto* eq21_cmd = app.add_subcommand("eq21", "four-term alternation of the cycle census");
  eq21_cmd->fallthrough();
  eq21_cmd->add_option("--n", eq21_n, "order")->required()->check(CLI::PositiveNumber);

  int ind_n = 0;
  std::string ind_shape, ind_mask;
  auto* ind_cmd = app.add_subcommand("indicator", "cycle-type indicator polynomial of a zigzag class");
  ind_cmd->fallthrough();
  ind_cmd->add_option("--n", ind_n, "order")->required()->check(CLI::PositiveNumber);
  ind_cmd->add_option("--shape", ind_shape, "zigzag shape")
      ->required()
      ->check(CLI::IsMember({"alternating", "antialternating"}));
  ind_cmd->add_option("--mask", ind_mask, "0/1 position-restriction matrix file");

  int rpoly_n = 0;
  bool rpoly_quotient = false;
  auto* rpoly_cmd =
      app.add_subcommand("rpoly", "alternating minus antialternating indicator");
  rpoly_cmd->fallthrough();
  rpoly_cmd->add_option("--n", rpoly_n, "order")->required()->check(CLI::PositiveNumber);
  rpoly_cmd->add_flag("--quotient", rpoly_quotient, "divide by t1^2 - t2 first");

  int ratios_n_max = 0;
  auto* ratios_cmd =
      app.add_subcommand("ratios", "zigzag-to-derangement ratio rows bracketing e");
  ratios_cmd->fallthrough();
  ratios_cmd->add_option("--n-max", ratios_n_max, "largest order")
      ->required()
      ->check(CLI::PositiveNumber);

  int seq_eq = 0;
  std::size_t seq_limit = 32;
  auto* seq_cmd = app.add_subcommand("sequences", "concatenated census blocks as one sequence");
  seq_cmd->fallthrough();
  seq_cmd->add_option("--eq", seq_eq, "which sequence")
      ->required()
      ->check(CLI::IsMember({23, 26, 30, 41}));
  seq_cmd->add_option("--limit", seq_limit, "number of terms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string fixtures = "fixtures";
  if (const char* env = std::getenv("UPDOWN_FIXTURES_DIR")) fixtures = env;
  bool quick = false;
  auto* verify_cmd = app.add_subcommand("verify-all", "run every fixture check and report PASS/FAIL");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--fixtures", fixtures, "fixtures directory")->capture_default_str();
  verify_cmd->add_flag("--quick", quick, "skip the slowest order-11/12 sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (jobs >= 1) omp_set_num_threads(jobs);
  if (force)
    std::cerr << "warning: --force lifts the resource caps; the run may take far longer"
                 " than the guarded defaults\n";
  const bool csv = format == "csv";

  try {
    if (*basis_cmd) return run_basis(basis_n, basis_k, csv);
    if (*block_cmd) {
      if (want_perms)
        print_block(block_n, updown::basis_block(block_n), csv);
      else if (want_cycles)
        print_block(block_n, updown::full_cycle_block(block_n, force).counts, csv);
      else if (want_der)
        print_block(block_n, updown::derangement_block(block_n, force).counts, csv);
      return 0;
    }
    if (*perf_cmd) return run_matrix("perf", perf_file, csv, force);
    if (*per_cmd) return run_matrix("per", per_file, csv, force);
    if (*det_cmd) return run_matrix("det", det_file, csv, force);
    if (*conj1_cmd)
      return run_conj1(conj1_n, conj1_k, conj1_k_opt->count() > 0, csv, force);
    if (*conj2_cmd) return run_conj2(conj2_n, csv, force);
    if (*eq21_cmd) return run_eq21(eq21_n, csv, force);
    if (*ind_cmd) return run_indicator(ind_n, ind_shape, ind_mask, csv, force);
    if (*rpoly_cmd) return run_rpoly(rpoly_n, rpoly_quotient, csv, force);
    if (*ratios_cmd) return run_ratios(ratios_n_max, csv, force);
    if (*seq_cmd) return run_sequences(seq_eq, seq_limit, csv, force);
    if (*verify_cmd) return run_verify(fixtures, !quick);
  } catch (const updown::fixture_error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const updown::resource_limit_error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}
