#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trackgen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

// Runs one `trackgen` invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace trackgen::cli
