#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isocompat::cli {

/// Exit codes: 0 analysis completed (any verdict), 2 usage or input error,
/// 3 output IO error, 4 invariant violation in the input (e.g. a twist that fails
/// verification where one is required).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitInvariant = 4;

/// Full command line (args[0] is the program name). Reports go to --out or `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isocompat::cli
