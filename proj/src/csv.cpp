#include "spheremax/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace spheremax {

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv_preamble(std::ostream& out, const std::string& config,
                        const std::vector<std::string>& columns) {
  out << "# spheremax " << kToolkitVersion << ' ' << config << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out << ',';
    out << columns[i];
  }
  out << '\n';
}

}  // namespace spheremax
