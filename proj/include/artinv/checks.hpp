#ifndef ARTINV_CHECKS_HPP
#define ARTINV_CHECKS_HPP

#include <string>
#include <vector>

#include "artinv/artin.hpp"
#include "artinv/frobeq.hpp"

/*
 * Named verification suites.  Each suite exhaustively checks one of the
 * structural statements over its field grid and throws CheckFail (naming
 * the statement) on any violation.  The CLI `check` subcommand and the
 * acceptance test binary share this registry.
 */

namespace artinv {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<std::string> check_names();
// qmax caps every field grid; 0 means the full default grid
CheckResult run_check(const std::string& name, uint64_t qmax);
std::vector<CheckResult> run_all_checks(uint64_t qmax);

}  // namespace artinv

#endif
