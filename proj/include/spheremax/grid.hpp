#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace spheremax {

using Complex = std::complex<double>;

/// Shape of an n-dimensional periodic grid: x_j = (j/N)·L on every axis.
struct GridGeometry {
  int dim = 1;
  std::vector<int> sizes;  // per-axis point counts, each a power of two
  double side = 1.0;       // physical period L, identical on every axis

  /// Cube N^dim of side L.
  static GridGeometry cube(int dim, int size, double side = 1.0);

  std::size_t point_count() const;
  double spacing(int axis) const { return side / sizes[static_cast<std::size_t>(axis)]; }
  double cell_volume() const;
  double volume() const;

  /// Throws PreconditionError unless 1 <= dim <= 4, sizes are powers of two
  /// and side > 0.
  void validate() const;

  /// Per-axis integer index of a row-major linear index.
  std::vector<int> unravel(std::size_t linear) const;

  /// Coordinate of a node on the centered chart [−L/2, L/2)^n.
  std::vector<double> centered_coordinate(std::size_t linear) const;

  friend bool operator==(const GridGeometry&, const GridGeometry&) = default;
};

enum class Domain { space, frequency };

/// Complex samples on a periodic grid, row-major. Immutable once built.
class GridFunction {
 public:
  GridFunction(GridGeometry geometry, std::vector<Complex> samples,
               Domain domain = Domain::space);

  /// Real samples promoted to complex.
  static GridFunction from_real(GridGeometry geometry, std::span<const double> values);
  static GridFunction zeros(GridGeometry geometry);

  const GridGeometry& geometry() const noexcept { return geometry_; }
  Domain domain() const noexcept { return domain_; }
  std::span<const Complex> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const Complex& operator[](std::size_t i) const { return samples_[i]; }

  /// Sum of |f|² (no cell-volume weight).
  double energy() const;
  /// Discrete L² norm with cell-volume weight: (Σ|f|²·h^n)^{1/2}.
  double l2_norm() const;
  double max_abs() const;
  /// Largest |Im f| relative to the real-part sup norm (0 for the zero function).
  double imag_ratio() const;

  std::vector<double> abs_values() const;
  std::vector<double> real_values() const;

  GridFunction scaled(Complex c) const;
  GridFunction plus(const GridFunction& other) const;
  GridFunction minus(const GridFunction& other) const;

 private:
  GridGeometry geometry_;
  std::vector<Complex> samples_;
  Domain domain_;
};

/// Integer lattice frequencies k ∈ {−N/2, …, N/2−1} per axis; ξ = k/L.
class FrequencyLattice {
 public:
  explicit FrequencyLattice(const GridGeometry& geometry);

  const GridGeometry& geometry() const noexcept { return geometry_; }
  std::size_t size() const noexcept { return squared_index_.size(); }
  /// Σ k_i² at a node.
  std::int64_t squared_index(std::size_t node) const { return squared_index_[node]; }
  /// |ξ| = sqrt(Σ k_i²)/L.
  double radius(std::size_t node) const;
  std::vector<int> wavenumber(std::size_t node) const;
  /// Row-major node index of an integer wavenumber (wrapped mod N).
  std::size_t node_of(std::span<const int> k) const;

 private:
  GridGeometry geometry_;
  std::vector<std::int64_t> squared_index_;
};

/// Signed DFT frequency for index j on an axis of n points.
int signed_frequency(int j, int n);

/// Unitary DFT, F_k = N^{-1/2} Σ_j f_j e^{−2πi j·k/N}.
GridFunction dft_forward(const GridFunction& f);
GridFunction dft_inverse(const GridFunction& spectrum);

/// Radial symbol m(|ξ|) for |ξ| > 0.
using RadialSymbol = std::function<Complex(double)>;

/// Forward transform kept around so several symbols can share it.
class Spectrum {
 public:
  explicit Spectrum(const GridFunction& f);

  const FrequencyLattice& lattice() const noexcept { return lattice_; }
  const GridFunction& coefficients() const noexcept { return coefficients_; }

  /// Multiply every nonzero frequency by m(|ξ|) and ξ = 0 by zero_mode, then
  /// return to space. The symbol is evaluated once per distinct |ξ|.
  /// Throws MultiplierError if m is non-finite at some needed |ξ|.
  GridFunction apply(const RadialSymbol& m, Complex zero_mode) const;

 private:
  FrequencyLattice lattice_;
  GridFunction coefficients_;
};

GridFunction apply_radial_multiplier(const GridFunction& f, const RadialSymbol& m,
                                     Complex zero_mode);

// Test-function factory.

/// e^{2πi k·x/L}.
GridFunction plane_wave(const GridGeometry& geometry, std::span<const int> k);

/// exp(−|x − c|²/w²) with the minimum-image displacement; mass (√π·w)^n.
GridFunction gaussian_bump(const GridGeometry& geometry, std::span<const double> center,
                           double width);

/// Real part of a random combination of modes with |k| ≤ cutoff.
/// Deterministic in seed across platforms. Throws PreconditionError if the
/// cutoff reaches the Nyquist index N/2 on any axis.
GridFunction random_band_limited(const GridGeometry& geometry, std::uint64_t seed,
                                 double cutoff);

}  // namespace spheremax
