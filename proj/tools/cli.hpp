#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace burnside::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFalsified = 1,
  kUsageError = 2,
  kCapExceeded = 3,
};

inline constexpr const char* kCapEnvironmentVariable = "BURNSIDE_ENUM_CAP";

/// Runs one command. `args` excludes the program name. Output reaches `out`
/// only when the command completes (exit 0 or 1); diagnostics go to `err`.
/// `env_cap` is the value of the cap environment variable, if set; --cap wins.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_cap = std::nullopt);

}  // namespace burnside::cli
