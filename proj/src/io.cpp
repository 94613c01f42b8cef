#include "spheremax/io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>

#include "spheremax/errors.hpp"

namespace spheremax {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

json header(const GridGeometry& g, const char* dtype) {
  json j;
  j["format_version"] = kFormatVersion;
  j["dtype"] = dtype;
  j["dim"] = g.dim;
  j["sizes"] = g.sizes;
  j["side"] = g.side;
  return j;
}

json parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(std::string("grid file: ") + e.what());
  }
}

GridGeometry read_header(const json& j, const char* dtype) {
  try {
    if (!j.is_object()) throw FormatError("grid file: top level must be an object");
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw FormatError("grid file: unsupported format_version");
    }
    const std::string found = j.value("dtype", std::string("complex"));
    if (found != dtype) {
      throw FormatError("grid file: dtype '" + found + "', expected '" + dtype + "'");
    }
    GridGeometry g{j.at("dim").get<int>(), j.at("sizes").get<std::vector<int>>(),
                   j.at("side").get<double>()};
    if (static_cast<int>(g.sizes.size()) != g.dim) {
      throw FormatError("grid file: sizes length differs from dim");
    }
    try {
      g.validate();
    } catch (const PreconditionError& e) {
      throw FormatError(std::string("grid file: ") + e.what());
    }
    if (!j.at("samples").is_array() || j.at("samples").size() != g.point_count()) {
      throw FormatError("grid file: samples length differs from the grid size");
    }
    return g;
  } catch (const json::exception& e) {
    throw FormatError(std::string("grid file: ") + e.what());
  }
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  return in;
}

}  // namespace

void write_grid(std::ostream& out, const GridFunction& f) {
  json j = header(f.geometry(), "complex");
  json samples = json::array();
  for (const auto& z : f.samples()) samples.push_back({z.real(), z.imag()});
  j["samples"] = std::move(samples);
  out << j.dump() << '\n';
}

GridFunction read_grid(std::istream& in) {
  const json j = parse(in);
  const GridGeometry g = read_header(j, "complex");
  std::vector<Complex> samples;
  samples.reserve(g.point_count());
  try {
    for (const auto& pair : j.at("samples")) {
      if (!pair.is_array() || pair.size() != 2) throw FormatError("grid file: sample must be [re, im]");
      samples.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("grid file: ") + e.what());
  }
  try {
    return GridFunction(g, std::move(samples));
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("grid file: ") + e.what());
  }
}

void write_grid_file(const std::filesystem::path& path, const GridFunction& f) {
  auto out = open_out(path);
  write_grid(out, f);
}

GridFunction read_grid_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_grid(in);
}

void write_exponent(std::ostream& out, const VariableExponent& p) {
  json j = header(p.geometry(), "exponent");
  json samples = json::array();
  for (double v : p.samples()) samples.push_back(std::isinf(v) ? -1.0 : v);
  j["samples"] = std::move(samples);
  j["p_infinity"] = std::isinf(p.p_infinity()) ? -1.0 : p.p_infinity();
  out << j.dump() << '\n';
}

VariableExponent read_exponent(std::istream& in) {
  const json j = parse(in);
  const GridGeometry g = read_header(j, "exponent");
  auto decode = [](double v) { return v == -1.0 ? kInfiniteExponent : v; };
  std::vector<double> samples;
  samples.reserve(g.point_count());
  double p_inf = 0.0;
  try {
    for (const auto& v : j.at("samples")) samples.push_back(decode(v.get<double>()));
    p_inf = decode(j.at("p_infinity").get<double>());
  } catch (const json::exception& e) {
    throw FormatError(std::string("exponent file: ") + e.what());
  }
  try {
    return VariableExponent(g, std::move(samples), p_inf);
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("exponent file: ") + e.what());
  }
}

void write_exponent_file(const std::filesystem::path& path, const VariableExponent& p) {
  auto out = open_out(path);
  write_exponent(out, p);
}

VariableExponent read_exponent_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_exponent(in);
}

}  // namespace spheremax
