#include "updown/census.hpp"
#include "updown/indicator.hpp"
#include "updown/matrix.hpp"

#include <omp.h>

#include <cstdio>
#include <cstdlib>

/* Times each parallel kernel against its serial reference on a fixed
 * workload and checks that the two produce identical results.  Not part
 * of the test suite; build and run by hand when touching the kernels. */

namespace {

template <class Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = omp_get_wtime();
    fn();
    const double t1 = omp_get_wtime();
    if (t1 - t0 < best) best = t1 - t0;
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s %9.3f ms %9.3f ms %6.2fx\n", name, serial * 1e3, parallel * 1e3,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("%-28s %12s %12s %7s  (%d threads, best of %d)\n", "kernel", "serial",
              "parallel", "speedup", omp_get_max_threads(), reps);

  {
    const int n = 10;
    updown::CensusBlock serial_block, parallel_block;
    const double ts = best_of(reps, [&] { serial_block = updown::ref::full_cycle_block(n); });
    const double tp = best_of(reps, [&] { parallel_block = updown::full_cycle_block(n); });
    if (!(serial_block == parallel_block)) {
      std::fprintf(stderr, "full_cycle_block(%d): serial and parallel disagree\n", n);
      return 1;
    }
    report("full_cycle_block n=10", ts, tp);
  }

  {
    const auto m = updown::ones_matrix(18);
    updown::Int serial_value, parallel_value;
    const double ts = best_of(reps, [&] { serial_value = updown::ref::permanent(m, true); });
    const double tp = best_of(reps, [&] { parallel_value = updown::permanent(m, true); });
    if (serial_value != parallel_value) {
      std::fprintf(stderr, "permanent(J_18): serial and parallel disagree\n");
      return 1;
    }
    report("permanent order 18", ts, tp);
  }

  {
    const int n = 11;
    updown::CycleTypePolynomial serial_poly, parallel_poly;
    const double ts = best_of(reps, [&] {
      serial_poly = updown::ref::cyclic_indicator(updown::PositionMask::all(n),
                                                  updown::Zigzag::alternating);
    });
    const double tp =
        best_of(reps, [&] { parallel_poly = updown::cyclic_indicator(n, updown::Zigzag::alternating); });
    if (!(serial_poly == parallel_poly)) {
      std::fprintf(stderr, "cyclic_indicator(%d): serial and parallel disagree\n", n);
      return 1;
    }
    report("cyclic_indicator n=11", ts, tp);
  }

  return 0;
}
