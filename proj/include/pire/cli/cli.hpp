#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pire::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInput = 2;

/// Runs one command line (args[0] is the program name). Summaries go to
/// `out`; every failure prints one line "error: <kind>: <reason>" to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pire::cli
