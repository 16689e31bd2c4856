#include <cstdlib>
#include <iostream>
#include <string>

#include "updown/verify.hpp"

/* Runs the full check suite against a fixtures directory and prints one
 * PASS/FAIL line per check.  Exit 0 when everything passes, 1 when any
 * check fails, 2 when a fixture file is missing. */
int main(int argc, char** argv) {
  std::string fixtures = "fixtures";
  if (const char* env = std::getenv("UPDOWN_FIXTURES_DIR")) fixtures = env;
  if (argc > 1) fixtures = argv[1];

  updown::VerifyOptions opts;
  opts.fixtures_dir = fixtures;

  try {
    const auto results = updown::run_acceptance(opts);
    bool all = true;
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
      all = all && r.pass;
    }
    return all ? 0 : 1;
  } catch (const updown::fixture_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
