#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spheremax::cli {

/// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kFailure = 1;        // numerical or internal failure
inline constexpr int kPrecondition = 2;   // bad flags, files or parameters
inline constexpr int kAccuracy = 3;       // accuracy warning under --strict

/// Run one experiment. args excludes the program name. Errors are reported
/// as a single line "error: <category>: <message>" on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spheremax::cli
