#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modseries::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kParse = 2;
inline constexpr int kResource = 3;
inline constexpr int kSeriesValidation = 4;
inline constexpr int kPrecondition = 5;

/// Runs one invocation. args excludes the program name. The whole report
/// goes to `out`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace modseries::cli
