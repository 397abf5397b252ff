#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ngsemi::cli {

inline constexpr const char* schema_version = "ngsemi/1";

enum ExitCode : int {
    exit_ok = 0,
    exit_violation = 1,
    exit_usage = 2,
};

/// Runs one invocation; args excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Accepts "4 5 11", "4,5,11" or any mix; throws ngsemi::Error on bad tokens.
std::vector<long long> parse_generator_tokens(const std::vector<std::string>& tokens);

} // namespace ngsemi::cli
