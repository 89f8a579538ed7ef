#pragma once

#include "cif/config.hpp"

namespace cif {

/// v = (sin x cos y, -cos x sin y), rho = 1 + amplitude sin x sin y.
State taylor_green_state(const Grid& grid, double amplitude);
/// v = (sin y, 0.05 sin x), rho = 1 + amplitude cos x.
State shear_state(const Grid& grid, double amplitude);
/// v = 0, rho = 1 + amplitude (Gaussian bump centred in the box, mean removed).
State density_bump_state(const Grid& grid, double amplitude);

/// grad(sin x sin y): a pure gradient field, the default compressible perturbation.
VectorField gradient_perturbation(const Grid& grid);

Grid build_grid(const Config& config);
PressureLaw build_law(const Config& config);
/// SchemeConfig with eps, mollifier and v0_1 filled in.
SchemeConfig build_scheme(const Config& config, const Grid& grid);
TimeControls build_controls(const Config& config);
/// Initial state from init.preset. custom_file reads a field dump, whose grid
/// must match grid.n.
State build_initial_state(const Config& config);

}  // namespace cif
