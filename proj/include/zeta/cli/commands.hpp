// Entry point of the `zeta` command-line tool.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs `zeta <args...>` (args exclude the program name). `env_config` is the
/// ZETA_CONFIG fallback used when --config is absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_config = std::nullopt);

}  // namespace zeta::cli
