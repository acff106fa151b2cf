#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace brieskorn::cli {

/// Exit codes: 0 success, 1 internal error, 2 invalid input or usage,
/// 3 search budget exceeded.
inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_budget = 3;

/// Runs one command; `args` starts at the subcommand name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV header of the scan subcommand.
extern const char* const scan_header;

} // namespace brieskorn::cli
