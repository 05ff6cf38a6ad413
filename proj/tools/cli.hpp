#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphdyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one invocation. args[0] is the program name. Results go to `out`
/// unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphdyn::cli
