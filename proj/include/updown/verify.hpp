#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "updown/indicator.hpp"
#include "updown/numeric.hpp"

namespace updown {

/* Thrown when a fixture file is absent or unreadable (as opposed to
 * present but wrong, which is an ordinary check failure). */
class fixture_error : public std::runtime_error {
public:
  explicit fixture_error(const std::string& path)
      : std::runtime_error("missing or unreadable fixture: " + path), path_(path) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  /* observed vs expected, compact */
};

struct VerifyOptions {
  std::string fixtures_dir = "fixtures";
  /* The extended sweep adds the slow tails (order-12 indicators and the
   * order-11/12 cycle censuses).  A few extra minutes on one core. */
  bool extended = true;
};

std::vector<Int> load_sequence(const std::string& path);
CycleTypePolynomial load_polynomial(const std::string& path);

/* Runs every check and reports one result per check, in a fixed order.
 * Throws fixture_error if a required fixture file cannot be read. */
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts);

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace updown
