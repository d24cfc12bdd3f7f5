#include <iostream>

#include "fqsym/cli_core.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  fqsym::CliOutcome outcome = fqsym::run_cli(args);
  for (const std::string& line : outcome.lines) std::cout << line << "\n";
  if (!outcome.report.is_null() && !outcome.report.empty()) std::cout << outcome.report.dump() << "\n";
  if (!outcome.diagnostics.empty()) std::cerr << outcome.diagnostics << "\n";
  return outcome.exit_code;
}
