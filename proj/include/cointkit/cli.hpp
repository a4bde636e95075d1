#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cointkit::cli {

inline constexpr const char* kDataEnvVar = "COINTKIT_DATA";

/// Exit status: 0 success, 1 test-level failure (degenerate input, failed
/// --check), 2 usage or configuration error. Machine-readable output only
/// ever goes to `out`.
struct CommandOutcome {
    int exit_status = 0;
    std::string out;
    std::string err;
};

struct Environment {
    std::optional<std::string> default_data;  // value of COINTKIT_DATA
};

/// Runs `cointkit <args...>` (args exclude the program name).
[[nodiscard]] CommandOutcome run(const std::vector<std::string>& args, const Environment& env = {});

}  // namespace cointkit::cli
