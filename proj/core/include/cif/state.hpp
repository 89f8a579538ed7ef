#pragma once

#include <optional>

#include "cif/field.hpp"

namespace cif {

/// Density at or below this value is treated as vacuum.
inline constexpr double kRhoFloor = 1e-8;

/// Translated unknown (rho - rho_bar, v) about the constant reference
/// (rho_bar, 0). p_tilde is carried only by artificial-compressibility runs.
struct State {
  ScalarField rho_tilde;
  VectorField v;
  std::optional<ScalarField> p_tilde;
  double rho_bar = 1.0;

  const Grid& grid() const noexcept { return rho_tilde.grid(); }
  /// Physical density rho_bar + rho_tilde.
  ScalarField density() const;
  double min_density() const;
  bool all_finite() const noexcept;
};

/// Time derivative of a State; same blocks, no reference constant.
struct Tendency {
  ScalarField rho_tilde;
  VectorField v;
  std::optional<ScalarField> p_tilde;

  static Tendency zero_like(const State& s);
  Tendency& operator+=(const Tendency& other);
  Tendency& operator*=(double s) noexcept;
  Tendency& axpy(double s, const Tendency& other);
  bool all_finite() const noexcept;
};

/// s + dt * k
State advance(const State& s, double dt, const Tendency& k);

/// Builds the translated state. rho_bar defaults to the spatial mean of rho.
/// Throws PositivityLoss if rho <= kRhoFloor anywhere and
/// PreconditionError if rho_bar <= 0.
State translate(const ScalarField& rho, VectorField v,
                std::optional<double> rho_bar = std::nullopt);
/// Physical density of a translated state.
ScalarField untranslate(const State& s);

/// Throws PositivityLoss naming `where` if min(rho_bar + rho_tilde) <= floor.
void require_positive_density(const ScalarField& rho, const char* where,
                              double floor = kRhoFloor);

/// Mean-square distance of the (rho_tilde, [p_tilde,] v) blocks.
double state_distance(const State& a, const State& b);
/// Mean-square norm of the same blocks.
double state_norm(const State& s);

}  // namespace cif
