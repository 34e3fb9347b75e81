#ifndef ROOKMN_VERIFY_HPP
#define ROOKMN_VERIFY_HPP

#include <string>
#include <vector>

#include "rookmn/ints.hpp"

namespace rookmn {

// Re-checkable internal consistency suites, exposed through the CLI so a
// user can re-run the cross-validations on demand. Each check is exhaustive
// over all elements (or pairs, or triples) of M_n for a range of n; n_max
// bounds the range, and checks whose cost grows too fast additionally cap
// themselves (the detail string reports the range actually covered).
//
// Suites: algebra, oracle, counts, roots, generators, census, diagrams, all.

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // coverage summary, or the failure description
};

std::vector<std::string> verify_suite_names();

// Throws ValidationError for an unknown suite name or n_max < 2.
std::vector<CheckResult> run_verify_suite(const std::string& suite, Int n_max, int threads = 0);

}  // namespace rookmn

#endif  // ROOKMN_VERIFY_HPP
