// The acceptance suite: fourteen end-to-end checks of the library against
// its reference data, runnable from the CLI (`selftest`) and from the test
// harness.  See LICENSE.
#ifndef DMW_SELFTEST_HPP
#define DMW_SELFTEST_HPP

#include <string>
#include <vector>

namespace dmw {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // one-line summary, or the failure cause
  double ms = 0.0;     // wall-clock time
};

// Runs all fourteen criteria in order.  Never throws: a criterion that
// raises is reported as failed with the exception text in `detail`.
std::vector<CriterionResult> run_acceptance();

}  // namespace dmw

#endif  // DMW_SELFTEST_HPP
