#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracpm {

/// Periodic uniform lattice over [-L/2, L/2)^d, d in {1, 2}, N points per
/// axis (power of two, N >= 16).
struct Grid {
  int d = 1;
  int n = 256;
  double l = 16.0;

  void validate() const;
  std::size_t size() const;
  double spacing() const { return l / n; }
  double cell_volume() const;
  double coordinate(int i) const { return -0.5 * l + spacing() * i; }
  /// Angular wavenumber 2 pi k / L of signed mode index k.
  double wavenumber(int k) const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Real samples on a grid, row-major (index = i0 * n + i1 in 2-D, where i0
/// runs along x).
struct Field {
  Grid grid;
  std::vector<double> values;

  explicit Field(const Grid& g);
  Field(const Grid& g, std::vector<double> v);

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }
};

using VectorField = std::vector<Field>;

/// Samples fn at every grid node. `fn` receives the node coordinates.
Field sample(const Grid& g, const std::function<double(std::span<const double>)>& fn);

/// Half-complex spectrum of a real field as produced by a real-to-complex
/// FFT: shape n (x n/2+1 in 2-D, n/2+1 in 1-D), unnormalised.
struct Spectrum {
  Grid grid;
  std::vector<std::complex<double>> coeffs;

  std::size_t half() const { return static_cast<std::size_t>(grid.n / 2 + 1); }
};

Spectrum forward(const Field& f);
/// Inverse transform including the 1/N^d normalisation.
Field inverse(const Spectrum& s);

/// Visits every stored spectral coefficient with its signed mode indices
/// (k[1] unused in 1-D). The last axis runs over 0..n/2.
void for_each_mode(const Grid& g,
                   const std::function<void(std::size_t idx, int k0, int k1)>& visit);

}  // namespace fracpm
