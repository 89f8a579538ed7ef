#pragma once

#include <optional>

#include "cif/pressure_law.hpp"
#include "cif/spectral.hpp"
#include "cif/state.hpp"

namespace cif::detail {

struct Mollification {
  double eps;
  MollifierKind kind;
};

enum class DensityForm { Transport, Conservative };

// Spectral coefficients of the dealiased advective tendency
//   rho~' = -v_c . grad(J rho~)            (transport form)
//         or -div(rho_c v_c)               (conservative form)
//   v'    = -(v_c . grad) J v - f(rho_c, v_c) grad(J rho~)
// with J the optional mollifier, rho_c = rho_bar + J rho~ and v_c = J v.
// The outer J and any projection are left to the caller.
//
// With literal_sandwich set, the transport rho block is instead evaluated as
// -(rho_c / f) J[(f / rho_c) v_c . grad(J rho~)] and returned already
// mollified (flag outer_mollified).
struct SpectralTendency {
  SpectralCoefficients rho;
  SpectralVector v;
  bool rho_outer_mollified = false;
};

SpectralTendency advective_terms(const State& state, const PressureLaw& law,
                                 const std::optional<Mollification>& moll, DensityForm form,
                                 bool literal_sandwich = false);

}  // namespace cif::detail
