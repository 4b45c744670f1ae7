#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vcauchy {

/// Exit codes: identity holds / command succeeded, identity failed, usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name), writing results to `out`
/// and diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vcauchy
