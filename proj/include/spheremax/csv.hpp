#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spheremax {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// Locale-independent "%.17g" rendering, so reruns are byte-identical.
std::string csv_number(double v);

/// "# spheremax <version> <config>" comment line followed by the header row.
void write_csv_preamble(std::ostream& out, const std::string& config,
                        const std::vector<std::string>& columns);

}  // namespace spheremax
