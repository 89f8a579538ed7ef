#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "cif/grid.hpp"

namespace cif {

/// Real samples of a scalar on a Grid, one per node, row-major.
class ScalarField {
 public:
  explicit ScalarField(const Grid& grid);
  ScalarField(const Grid& grid, double value);
  ScalarField(const Grid& grid, std::vector<double> values);

  /// Samples fn(x, y) at every node.
  static ScalarField from_function(const Grid& grid,
                                   const std::function<double(double, double)>& fn);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  double& operator[](std::size_t i) noexcept { return values_[i]; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double& at(std::size_t ix, std::size_t iy) noexcept { return values_[iy * grid_.n() + ix]; }
  double at(std::size_t ix, std::size_t iy) const noexcept {
    return values_[iy * grid_.n() + ix];
  }

  std::vector<double>& values() noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double s) noexcept;
  /// this += s * other
  ScalarField& axpy(double s, const ScalarField& other);

  double mean() const noexcept;
  double min() const noexcept;
  double max() const noexcept;
  double max_abs() const noexcept;
  bool all_finite() const noexcept;

 private:
  Grid grid_;
  std::vector<double> values_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
/// Nodewise product.
ScalarField hadamard(const ScalarField& a, const ScalarField& b);

/// Mean-square inner product <a, b> = mean(a * b).
double inner(const ScalarField& a, const ScalarField& b);
/// Mean-square norm sqrt(mean(a^2)); equals the s = 0 Sobolev norm.
double rms(const ScalarField& a);

/// d scalar components sharing one grid.
class VectorField {
 public:
  explicit VectorField(const Grid& grid);
  VectorField(ScalarField c0, ScalarField c1);

  static VectorField from_function(
      const Grid& grid, const std::function<std::array<double, kDim>(double, double)>& fn);

  const Grid& grid() const noexcept { return comps_[0].grid(); }
  ScalarField& operator[](std::size_t j) noexcept { return comps_[j]; }
  const ScalarField& operator[](std::size_t j) const noexcept { return comps_[j]; }

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(double s) noexcept;
  VectorField& axpy(double s, const VectorField& other);

  bool all_finite() const noexcept;

 private:
  std::array<ScalarField, kDim> comps_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double s, VectorField a);

double inner(const VectorField& a, const VectorField& b);
double rms(const VectorField& a);
/// Nodewise Euclidean magnitude |v|.
ScalarField magnitude(const VectorField& v);

/// Fourier coefficients of a real field under the forward 1/n^2 scaling,
/// stored in the same row-major index order as the physical samples.
class SpectralCoefficients {
 public:
  explicit SpectralCoefficients(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::complex<double>& operator[](std::size_t i) noexcept { return coeffs_[i]; }
  const std::complex<double>& operator[](std::size_t i) const noexcept { return coeffs_[i]; }
  /// Coefficient at FFT indices (jx, jy).
  std::complex<double>& at(std::size_t jx, std::size_t jy) noexcept {
    return coeffs_[jy * grid_.n() + jx];
  }
  const std::complex<double>& at(std::size_t jx, std::size_t jy) const noexcept {
    return coeffs_[jy * grid_.n() + jx];
  }

  std::vector<std::complex<double>>& data() noexcept { return coeffs_; }
  const std::vector<std::complex<double>>& data() const noexcept { return coeffs_; }

 private:
  Grid grid_;
  std::vector<std::complex<double>> coeffs_;
};

/// Throws DimensionMismatch if the grids differ.
void require_same_grid(const Grid& a, const Grid& b, const char* what);

}  // namespace cif
