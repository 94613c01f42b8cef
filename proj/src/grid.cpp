#include "spheremax/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <unordered_map>

#include "spheremax/errors.hpp"

namespace spheremax {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// FFTW's planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Transforms always run through an fftw_malloc'd buffer so that the chosen
// codelets (and hence the rounding) do not depend on vector alignment.
std::vector<Complex> run_fft(const GridGeometry& g, std::span<const Complex> in, int sign) {
  const std::size_t count = in.size();
  auto* buffer = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * count));
  if (buffer == nullptr) throw std::bad_alloc();
  fftw_plan plan = nullptr;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(g.dim, g.sizes.data(), buffer, buffer, sign, FFTW_ESTIMATE);
  }
  std::copy(in.begin(), in.end(), reinterpret_cast<Complex*>(buffer));
  fftw_execute(plan);
  const double scale = 1.0 / std::sqrt(static_cast<double>(count));
  std::vector<Complex> out(count);
  const auto* result = reinterpret_cast<const Complex*>(buffer);
  for (std::size_t i = 0; i < count; ++i) out[i] = result[i] * scale;
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(buffer);
  return out;
}

double uniform_signed(std::mt19937_64& rng) {
  // 53 random bits mapped to [-1, 1).
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

}  // namespace

// ---------------------------------------------------------------- geometry

GridGeometry GridGeometry::cube(int dim, int size, double side) {
  GridGeometry g{dim, std::vector<int>(static_cast<std::size_t>(std::max(dim, 0)), size), side};
  g.validate();
  return g;
}

std::size_t GridGeometry::point_count() const {
  std::size_t n = 1;
  for (int s : sizes) n *= static_cast<std::size_t>(s);
  return n;
}

double GridGeometry::cell_volume() const {
  double v = 1.0;
  for (int s : sizes) v *= side / s;
  return v;
}

double GridGeometry::volume() const { return std::pow(side, dim); }

void GridGeometry::validate() const {
  if (dim < 1 || dim > 4) throw PreconditionError("grid: dimension must be in 1..4");
  if (sizes.size() != static_cast<std::size_t>(dim)) {
    throw PreconditionError("grid: sizes length must equal dim");
  }
  for (int s : sizes) {
    if (!is_power_of_two(s)) throw PreconditionError("grid: sizes must be powers of two");
  }
  if (!(side > 0.0) || !std::isfinite(side)) throw PreconditionError("grid: side must be > 0");
}

std::vector<int> GridGeometry::unravel(std::size_t linear) const {
  std::vector<int> idx(static_cast<std::size_t>(dim));
  for (int a = dim - 1; a >= 0; --a) {
    const auto n = static_cast<std::size_t>(sizes[static_cast<std::size_t>(a)]);
    idx[static_cast<std::size_t>(a)] = static_cast<int>(linear % n);
    linear /= n;
  }
  return idx;
}

std::vector<double> GridGeometry::centered_coordinate(std::size_t linear) const {
  const auto idx = unravel(linear);
  std::vector<double> x(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    x[a] = signed_frequency(idx[a], sizes[a]) * (side / sizes[a]);
  }
  return x;
}

// ------------------------------------------------------------ GridFunction

GridFunction::GridFunction(GridGeometry geometry, std::vector<Complex> samples, Domain domain)
    : geometry_(std::move(geometry)), samples_(std::move(samples)), domain_(domain) {
  geometry_.validate();
  if (samples_.size() != geometry_.point_count()) {
    throw PreconditionError("grid: sample count does not match geometry");
  }
  for (const auto& s : samples_) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
      throw PreconditionError("grid: samples must be finite");
    }
  }
}

GridFunction GridFunction::from_real(GridGeometry geometry, std::span<const double> values) {
  return GridFunction(std::move(geometry), std::vector<Complex>(values.begin(), values.end()));
}

GridFunction GridFunction::zeros(GridGeometry geometry) {
  const auto n = geometry.point_count();
  return GridFunction(std::move(geometry), std::vector<Complex>(n));
}

double GridFunction::energy() const {
  double e = 0.0;
  for (const auto& s : samples_) e += std::norm(s);
  return e;
}

double GridFunction::l2_norm() const { return std::sqrt(energy() * geometry_.cell_volume()); }

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const auto& s : samples_) m = std::max(m, std::abs(s));
  return m;
}

double GridFunction::imag_ratio() const {
  double re = 0.0;
  double im = 0.0;
  for (const auto& s : samples_) {
    re = std::max(re, std::abs(s.real()));
    im = std::max(im, std::abs(s.imag()));
  }
  if (re == 0.0) return im == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return im / re;
}

std::vector<double> GridFunction::abs_values() const {
  std::vector<double> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [](const Complex& c) { return std::abs(c); });
  return out;
}

std::vector<double> GridFunction::real_values() const {
  std::vector<double> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [](const Complex& c) { return c.real(); });
  return out;
}

GridFunction GridFunction::scaled(Complex c) const {
  std::vector<Complex> out(samples_);
  for (auto& s : out) s *= c;
  return GridFunction(geometry_, std::move(out), domain_);
}

GridFunction GridFunction::plus(const GridFunction& other) const {
  if (other.geometry_ != geometry_) throw PreconditionError("grid: geometry mismatch");
  std::vector<Complex> out(samples_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.samples_[i];
  return GridFunction(geometry_, std::move(out), domain_);
}

GridFunction GridFunction::minus(const GridFunction& other) const {
  return plus(other.scaled(-1.0));
}

// -------------------------------------------------------- FrequencyLattice

int signed_frequency(int j, int n) { return j < n / 2 ? j : j - n; }

FrequencyLattice::FrequencyLattice(const GridGeometry& geometry) : geometry_(geometry) {
  geometry_.validate();
  const std::size_t count = geometry_.point_count();
  squared_index_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto idx = geometry_.unravel(i);
    std::int64_t s = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const std::int64_t k = signed_frequency(idx[a], geometry_.sizes[a]);
      s += k * k;
    }
    squared_index_[i] = s;
  }
}

double FrequencyLattice::radius(std::size_t node) const {
  return std::sqrt(static_cast<double>(squared_index_[node])) / geometry_.side;
}

std::vector<int> FrequencyLattice::wavenumber(std::size_t node) const {
  auto idx = geometry_.unravel(node);
  for (std::size_t a = 0; a < idx.size(); ++a) idx[a] = signed_frequency(idx[a], geometry_.sizes[a]);
  return idx;
}

std::size_t FrequencyLattice::node_of(std::span<const int> k) const {
  if (k.size() != static_cast<std::size_t>(geometry_.dim)) {
    throw PreconditionError("grid: wavenumber rank does not match dimension");
  }
  std::size_t linear = 0;
  for (std::size_t a = 0; a < k.size(); ++a) {
    const int n = geometry_.sizes[a];
    const int wrapped = ((k[a] % n) + n) % n;
    linear = linear * static_cast<std::size_t>(n) + static_cast<std::size_t>(wrapped);
  }
  return linear;
}

// --------------------------------------------------------------------- DFT

GridFunction dft_forward(const GridFunction& f) {
  return GridFunction(f.geometry(), run_fft(f.geometry(), f.samples(), FFTW_FORWARD),
                      Domain::frequency);
}

GridFunction dft_inverse(const GridFunction& spectrum) {
  return GridFunction(spectrum.geometry(),
                      run_fft(spectrum.geometry(), spectrum.samples(), FFTW_BACKWARD),
                      Domain::space);
}

Spectrum::Spectrum(const GridFunction& f)
    : lattice_(f.geometry()),
      coefficients_(f.domain() == Domain::frequency ? f : dft_forward(f)) {}

GridFunction Spectrum::apply(const RadialSymbol& m, Complex zero_mode) const {
  std::unordered_map<std::int64_t, Complex> cache;
  const auto in = coefficients_.samples();
  std::vector<Complex> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const std::int64_t s = lattice_.squared_index(i);
    if (s == 0) {
      out[i] = in[i] * zero_mode;
      continue;
    }
    auto it = cache.find(s);
    if (it == cache.end()) {
      const double radius = lattice_.radius(i);
      const Complex value = m(radius);
      if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        std::ostringstream os;
        os << "multiplier: non-finite symbol at |xi| = " << radius;
        throw MultiplierError(os.str(), radius);
      }
      it = cache.emplace(s, value).first;
    }
    out[i] = in[i] * it->second;
  }
  return dft_inverse(GridFunction(coefficients_.geometry(), std::move(out), Domain::frequency));
}

GridFunction apply_radial_multiplier(const GridFunction& f, const RadialSymbol& m,
                                     Complex zero_mode) {
  return Spectrum(f).apply(m, zero_mode);
}

// ---------------------------------------------------------- test functions

GridFunction plane_wave(const GridGeometry& geometry, std::span<const int> k) {
  geometry.validate();
  if (k.size() != static_cast<std::size_t>(geometry.dim)) {
    throw PreconditionError("plane_wave: wavenumber rank does not match dimension");
  }
  const std::size_t count = geometry.point_count();
  std::vector<Complex> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto idx = geometry.unravel(i);
    // Phase in turns, reduced exactly with integer arithmetic per axis.
    double turns = 0.0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const std::int64_t n = geometry.sizes[a];
      const std::int64_t prod = ((static_cast<std::int64_t>(k[a]) * idx[a]) % n + n) % n;
      turns += static_cast<double>(prod) / static_cast<double>(n);
    }
    const double angle = 2.0 * std::numbers::pi * turns;
    out[i] = Complex(std::cos(angle), std::sin(angle));
  }
  return GridFunction(geometry, std::move(out));
}

GridFunction gaussian_bump(const GridGeometry& geometry, std::span<const double> center,
                           double width) {
  geometry.validate();
  if (center.size() != static_cast<std::size_t>(geometry.dim)) {
    throw PreconditionError("gaussian_bump: center rank does not match dimension");
  }
  if (!(width > 0.0)) throw PreconditionError("gaussian_bump: width must be > 0");
  const double L = geometry.side;
  const std::size_t count = geometry.point_count();
  std::vector<Complex> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto idx = geometry.unravel(i);
    double r2 = 0.0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      double d = idx[a] * (L / geometry.sizes[a]) - center[a];
      d -= L * std::round(d / L);
      r2 += d * d;
    }
    out[i] = std::exp(-r2 / (width * width));
  }
  return GridFunction(geometry, std::move(out));
}

GridFunction random_band_limited(const GridGeometry& geometry, std::uint64_t seed,
                                 double cutoff) {
  geometry.validate();
  if (!(cutoff >= 0.0)) throw PreconditionError("random_band_limited: cutoff must be >= 0");
  for (int n : geometry.sizes) {
    if (cutoff >= n / 2) {
      throw PreconditionError("random_band_limited: cutoff beyond Nyquist");
    }
  }
  FrequencyLattice lattice(geometry);
  std::mt19937_64 rng(seed);
  std::vector<Complex> coeff(geometry.point_count());
  const double c2 = cutoff * cutoff;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    // Draw for every node so the stream does not depend on the cutoff shape.
    const double re = uniform_signed(rng);
    const double im = uniform_signed(rng);
    if (static_cast<double>(lattice.squared_index(i)) <= c2) coeff[i] = Complex(re, im);
  }
  auto field = dft_inverse(GridFunction(geometry, std::move(coeff), Domain::frequency));
  std::vector<Complex> real(field.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < real.size(); ++i) {
    real[i] = field[i].real();
    peak = std::max(peak, std::abs(field[i].real()));
  }
  // Unit sup norm.
  if (peak > 0.0) {
    for (auto& v : real) v /= peak;
  }
  return GridFunction(geometry, std::move(real));
}

}  // namespace spheremax
