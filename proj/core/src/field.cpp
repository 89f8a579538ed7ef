#include "cif/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cif/errors.hpp"

namespace cif {

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
  if (!(a == b)) {
    throw DimensionMismatch(std::string(what) + ": fields live on different grids (n=" +
                            std::to_string(a.n()) + " vs n=" + std::to_string(b.n()) + ")");
  }
}

ScalarField::ScalarField(const Grid& grid) : grid_(grid), values_(grid.size(), 0.0) {}

ScalarField::ScalarField(const Grid& grid, double value)
    : grid_(grid), values_(grid.size(), value) {}

ScalarField::ScalarField(const Grid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw DimensionMismatch("ScalarField: expected " + std::to_string(grid_.size()) +
                            " samples, got " + std::to_string(values_.size()));
  }
}

ScalarField ScalarField::from_function(const Grid& grid,
                                       const std::function<double(double, double)>& fn) {
  ScalarField out(grid);
  const std::size_t n = grid.n();
  for (std::size_t iy = 0; iy < n; ++iy) {
    for (std::size_t ix = 0; ix < n; ++ix) {
      out.at(ix, iy) = fn(grid.x(ix), grid.y(iy));
    }
  }
  return out;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  require_same_grid(grid_, other.grid_, "ScalarField +=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  require_same_grid(grid_, other.grid_, "ScalarField -=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) noexcept {
  for (auto& v : values_) v *= s;
  return *this;
}

ScalarField& ScalarField::axpy(double s, const ScalarField& other) {
  require_same_grid(grid_, other.grid_, "ScalarField axpy");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += s * other.values_[i];
  return *this;
}

double ScalarField::mean() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0) /
         static_cast<double>(values_.size());
}

double ScalarField::min() const noexcept { return *std::min_element(values_.begin(), values_.end()); }
double ScalarField::max() const noexcept { return *std::max_element(values_.begin(), values_.end()); }

double ScalarField::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool ScalarField::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

ScalarField hadamard(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "hadamard");
  ScalarField out(a.grid());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

double inner(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "inner");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc / static_cast<double>(a.size());
}

double rms(const ScalarField& a) { return std::sqrt(inner(a, a)); }

VectorField::VectorField(const Grid& grid) : comps_{ScalarField(grid), ScalarField(grid)} {}

VectorField::VectorField(ScalarField c0, ScalarField c1)
    : comps_{std::move(c0), std::move(c1)} {
  require_same_grid(comps_[0].grid(), comps_[1].grid(), "VectorField");
}

VectorField VectorField::from_function(
    const Grid& grid, const std::function<std::array<double, kDim>(double, double)>& fn) {
  VectorField out(grid);
  const std::size_t n = grid.n();
  for (std::size_t iy = 0; iy < n; ++iy) {
    for (std::size_t ix = 0; ix < n; ++ix) {
      const auto v = fn(grid.x(ix), grid.y(iy));
      for (std::size_t j = 0; j < kDim; ++j) out[j].at(ix, iy) = v[j];
    }
  }
  return out;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  for (std::size_t j = 0; j < kDim; ++j) comps_[j] += other.comps_[j];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  for (std::size_t j = 0; j < kDim; ++j) comps_[j] -= other.comps_[j];
  return *this;
}

VectorField& VectorField::operator*=(double s) noexcept {
  for (auto& c : comps_) c *= s;
  return *this;
}

VectorField& VectorField::axpy(double s, const VectorField& other) {
  for (std::size_t j = 0; j < kDim; ++j) comps_[j].axpy(s, other.comps_[j]);
  return *this;
}

bool VectorField::all_finite() const noexcept {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const ScalarField& c) { return c.all_finite(); });
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double s, VectorField a) { return a *= s; }

double inner(const VectorField& a, const VectorField& b) {
  double acc = 0.0;
  for (std::size_t j = 0; j < kDim; ++j) acc += inner(a[j], b[j]);
  return acc;
}

double rms(const VectorField& a) { return std::sqrt(inner(a, a)); }

ScalarField magnitude(const VectorField& v) {
  ScalarField out(v.grid());
  for (std::size_t i = 0; i < out.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < kDim; ++j) s += v[j][i] * v[j][i];
    out[i] = std::sqrt(s);
  }
  return out;
}

SpectralCoefficients::SpectralCoefficients(const Grid& grid)
    : grid_(grid), coeffs_(grid.size(), std::complex<double>(0.0, 0.0)) {}

}  // namespace cif
