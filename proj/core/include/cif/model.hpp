#pragma once

#include "cif/pressure_law.hpp"
#include "cif/spectral.hpp"
#include "cif/state.hpp"

namespace cif {

/// Advective tendency without pressure or penalty terms:
///   rho~' = -v . grad rho~
///   v'    = -(v . grad) v - f(rho, v) grad rho~
/// Products are dealiased. Throws PositivityLoss if rho <= kRhoFloor.
/// A p_tilde block, when present, gets a zero tendency.
Tendency advective_rhs(const State& state, const PressureLaw& law);

/// Solves laplacian(P) = div(-(v . grad) v - f grad rho) spectrally, zero
/// mean. Logs a warning when the velocity is not divergence-free (> 1e-6).
ScalarField recover_pressure(const State& state, const PressureLaw& law);

/// rms(laplacian(P) - rhs) of the pressure equation, with the right-hand
/// side assembled independently from the state.
double pressure_residual(const ScalarField& pressure, const State& state,
                         const PressureLaw& law);

/// Block projector diag(Id, Leray): leaves rho~ (and p_tilde) alone.
Tendency block_project(const Tendency& t);

/// Multiplies the rho~ block by f / rho nodewise (A0 applied to a tendency).
/// f and rho are taken from `at`.
Tendency apply_symmetrizer(const Tendency& t, const State& at, const PressureLaw& law);

}  // namespace cif
