#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdesign {

/// Exit codes shared by every verb: a verdict verb answers with kExitTrue or
/// kExitFalse, usage and input problems are kExitUsage, and an exhausted
/// iteration budget (without a conclusive answer) is kExitBudget.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/**
 * A named, deterministic replay of one headline result. run() writes the
 * certificates to `out` and returns true when every recorded expectation
 * holds; `workers` feeds the search-based cases (the output must not depend
 * on it).
 */
struct ReproCase {
  std::string name;
  std::string summary;
  bool (*run)(std::ostream& out, int workers);
};

/// Registry of replay cases, sorted by name.
const std::vector<ReproCase>& repro_cases();

/**
 * Dispatches one command-line invocation; argv follows main() conventions
 * (argv[0] is the program name). All output goes to the supplied streams and
 * the return value is the process exit code.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdesign
