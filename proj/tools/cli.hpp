#ifndef ITERID_TOOLS_CLI_HPP
#define ITERID_TOOLS_CLI_HPP

#include <ostream>

namespace iterid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// Entry point of the iterid tool. Writes the report to `out` and
/// diagnostics to `err`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iterid::cli

#endif  // ITERID_TOOLS_CLI_HPP
