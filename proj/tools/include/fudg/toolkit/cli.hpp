#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fudg::toolkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalid = 3;

/// Runs the `fudg` command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fudg::toolkit
