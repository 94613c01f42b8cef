#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "spheremax/grid.hpp"
#include "spheremax/varlp.hpp"

namespace spheremax {

// Grid documents are JSON objects
//   {"format_version": 1, "dtype": "complex" | "exponent", "dim", "sizes",
//    "side", "samples"}
// with samples a row-major list of [re, im] pairs (complex) or reals
// (exponent; −1 encodes ∞, plus "p_infinity"). Numbers are written in
// shortest round-trip form, so reading back is exact.

void write_grid(std::ostream& out, const GridFunction& f);
GridFunction read_grid(std::istream& in);
void write_grid_file(const std::filesystem::path& path, const GridFunction& f);
GridFunction read_grid_file(const std::filesystem::path& path);

void write_exponent(std::ostream& out, const VariableExponent& p);
VariableExponent read_exponent(std::istream& in);
void write_exponent_file(const std::filesystem::path& path, const VariableExponent& p);
VariableExponent read_exponent_file(const std::filesystem::path& path);

}  // namespace spheremax
