#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skypath::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitEndpointInfeasible = 4;

/// Runs the skypath command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skypath::cli
