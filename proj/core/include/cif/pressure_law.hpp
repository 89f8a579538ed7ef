#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cif/field.hpp"

namespace cif {

using Vec = std::array<double, kDim>;

/// Scalar coefficient f(rho, v) of the compressible pressure term f grad(rho).
///
/// `phi` is set only when f depends on rho alone; it is an antiderivative
/// with phi'(rho) = f(rho), so f grad(rho) = grad(phi(rho)).
struct PressureLaw {
  std::string id;
  std::vector<double> params;
  std::function<double(double, const Vec&)> eval;
  std::function<Vec(double, const Vec&)> grad_v;
  std::function<double(double, const Vec&)> grad_rho;
  std::function<double(double)> phi;

  bool has_phi() const noexcept { return static_cast<bool>(phi); }

  /// Nodewise f(rho, v).
  ScalarField evaluate(const ScalarField& rho, const VectorField& v) const;
  /// Nodewise phi(rho); throws PreconditionError without phi.
  ScalarField evaluate_phi(const ScalarField& rho) const;
};

/// Shipped laws (parameters in order, defaults in brackets):
///   constant    f = fbar                 [1]
///   biofilm     f = gamma / rho          [0.5]
///   kinetic     f = fbar + c |v|^2       [1, 1]
///   affine_rho  f = fbar + a rho         [1, 0.5]
/// Throws ConfigError for an unknown id or wrong parameter count.
PressureLaw make_pressure_law(const std::string& id, std::span<const double> params = {});

/// f == 0; used to recover the homogeneous pressure Q of the reduced system.
PressureLaw zero_law();

struct LawSample {
  double rho;
  Vec v;
};

struct AdmissibilityReport {
  bool positive = true;
  bool gradient_parallel = true;
  bool alpha_nonnegative = true;
  /// alpha vanishes on every sample with |v| > 0 (e.g. constant f).
  bool degenerate = false;
  /// grad_v agrees with central differences of eval.
  bool grad_v_consistent = true;
  double min_f = 0.0;
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  /// Largest |grad_v - finite difference| / max(|grad_v|, 1).
  double max_fd_error = 0.0;

  bool admissible() const noexcept { return positive && gradient_parallel && alpha_nonnegative; }
};

/// Checks f > 0 and grad_v f = alpha(rho, |v|) v with alpha >= 0 on the
/// samples. Throws PreconditionError if a sample has rho <= 0.
AdmissibilityReport check_admissible(const PressureLaw& law, std::span<const LawSample> samples);

/// Deterministic sample cloud covering rho in [rho_lo, rho_hi], |v| <= v_max.
std::vector<LawSample> default_law_samples(double rho_lo = 0.5, double rho_hi = 2.0,
                                           double v_max = 2.0, std::size_t count = 256);

}  // namespace cif
