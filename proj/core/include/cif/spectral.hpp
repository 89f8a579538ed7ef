#pragma once

#include <array>
#include <string_view>

#include "cif/field.hpp"

// Periodic discrete calculus. Every operator here is a Fourier multiplier,
// so any two of them commute exactly up to rounding.

namespace cif {

SpectralCoefficients transform_forward(const ScalarField& field);
ScalarField transform_inverse(const SpectralCoefficients& coeffs);

using SpectralVector = std::array<SpectralCoefficients, kDim>;
SpectralVector transform_forward(const VectorField& v);
VectorField transform_inverse(const SpectralVector& coeffs);

// --- Physical-space operators ------------------------------------------------

VectorField gradient(const ScalarField& field);
ScalarField divergence(const VectorField& v);
ScalarField laplacian(const ScalarField& field);
/// Zero-mean solution of laplacian(phi) = rhs; the mean of rhs is ignored.
ScalarField inverse_laplacian(const ScalarField& rhs);

/// Leray projector P: I - xi xi^T / |xi|^2 per mode, identity on the mean.
VectorField leray_project(const VectorField& v);
/// Gradient part (I - P) v of the Hodge split.
VectorField gradient_part(const VectorField& v);

/// Radial smoothing multiplier. Equals 1 at xi = 0, is real, bounded by 1
/// and non-increasing in |xi|.
struct MollifierKind {
  enum class Kind { Gaussian, SharpCutoff };
  Kind kind = Kind::Gaussian;

  /// Gaussian: exp(-eps^2 |xi|^2). SharpCutoff: 1 for |xi| <= 1/eps, else 0.
  double multiplier(double eps, double xi_norm) const noexcept;

  static MollifierKind gaussian() { return {Kind::Gaussian}; }
  static MollifierKind sharp_cutoff() { return {Kind::SharpCutoff}; }
};

std::string_view to_string(MollifierKind::Kind kind) noexcept;
/// Accepts "gaussian" or "sharp"; throws PreconditionError otherwise.
MollifierKind parse_mollifier(std::string_view name);

/// Throws PreconditionError for eps <= 0.
ScalarField mollify(const ScalarField& field, double eps, MollifierKind kind);
VectorField mollify(const VectorField& v, double eps, MollifierKind kind);

/// (sum_xi (1 + |xi|^2)^s |c_xi|^2)^(1/2) under the 1/n^2 forward scaling.
double sobolev_norm(const ScalarField& field, double s);
double sobolev_norm(const VectorField& v, double s);

/// True when mode index m survives the 2/3 rule (|m| <= n/3).
bool dealias_keeps(const Grid& grid, std::size_t j) noexcept;
/// Zeroes every mode with some |index| > n/3.
SpectralCoefficients dealias(SpectralCoefficients coeffs);
/// Transform, truncate, transform back.
ScalarField dealias(const ScalarField& field);
VectorField dealias(const VectorField& v);

// --- Spectral-space kernels used by the right-hand sides ---------------------

/// i * xi_axis * c
SpectralCoefficients differentiate(const SpectralCoefficients& c, std::size_t axis);
SpectralCoefficients divergence(const SpectralVector& v);
void leray_project_in_place(SpectralVector& v);
void mollify_in_place(SpectralCoefficients& c, double eps, MollifierKind kind);
void dealias_in_place(SpectralCoefficients& c);

}  // namespace cif
