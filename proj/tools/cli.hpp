#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperoct::cli {

/// Exit codes: 0 all checks pass, 1 some check failed (report still written), 2 usage or budget error.
enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default work budget; the HYPEROCT_BUDGET environment variable overrides it, --budget overrides both.
inline constexpr double kDefaultBudget = 5e6;

}  // namespace hyperoct::cli
