#ifndef FQSYM_CLI_CORE_HPP
#define FQSYM_CLI_CORE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "fqsym/version.hpp"

namespace fqsym {

// Exit codes: 0 success / all checks pass, 1 a check found a failure,
// 2 usage error, 3 precondition violation.
struct CliOutcome {
  int exit_code = 0;
  nlohmann::json report;        // full run report (empty on usage errors)
  std::vector<std::string> lines;  // extra machine-readable lines (family-run)
  std::string diagnostics;      // rendered to stderr by the binary
};

CliOutcome run_cli(const std::vector<std::string>& args);

// ---------------------------------------------------------------------------
// selftest suites, shared by the CLI and the tests

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  double seconds = 0.0;
  std::vector<std::string> witnesses;
};

std::vector<std::string> selftest_suite_names();

// level: "quick" or "full"; fault names a suite that deliberately perturbs
// one computed value so the failure path stays exercised.
std::vector<SuiteResult> run_selftest(const std::string& level, std::uint64_t seed,
                                      const std::string& fault, const std::string& cache_dir);

}  // namespace fqsym

#endif
