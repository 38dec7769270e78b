#pragma once

#include <string>
#include <vector>

namespace optics::cli {

enum ExitCode : int { kOk = 0, kDomainFailure = 1, kUsage = 2 };

struct CommandOutcome {
    int exit_code = kOk;
    std::string out;  // machine-readable results only
    std::string err;  // diagnostics only
};

/// Runs one invocation. `args` excludes the program name.
CommandOutcome run(const std::vector<std::string>& args);

}  // namespace optics::cli
