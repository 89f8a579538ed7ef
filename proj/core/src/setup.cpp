#include "cif/setup.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cif/errors.hpp"
#include "cif/io.hpp"

namespace cif {

State taylor_green_state(const Grid& grid, double amplitude) {
  const double k = grid.k0();
  State s{ScalarField::from_function(
              grid, [&](double x, double y) { return amplitude * std::sin(k * x) * std::sin(k * y); }),
          VectorField::from_function(grid,
                                     [&](double x, double y) -> std::array<double, kDim> {
                                       return {std::sin(k * x) * std::cos(k * y),
                                               -std::cos(k * x) * std::sin(k * y)};
                                     }),
          std::nullopt, 1.0};
  return s;
}

State shear_state(const Grid& grid, double amplitude) {
  const double k = grid.k0();
  return State{
      ScalarField::from_function(grid, [&](double x, double) { return amplitude * std::cos(k * x); }),
      VectorField::from_function(grid,
                                 [&](double x, double y) -> std::array<double, kDim> {
                                   return {std::sin(k * y), 0.05 * std::sin(k * x)};
                                 }),
      std::nullopt, 1.0};
}

State density_bump_state(const Grid& grid, double amplitude) {
  const double c = 0.5 * grid.length();
  const double w = 0.1 * grid.length() * grid.length();
  ScalarField bump = ScalarField::from_function(grid, [&](double x, double y) {
    return amplitude * std::exp(-((x - c) * (x - c) + (y - c) * (y - c)) / w);
  });
  const double m = bump.mean();
  for (std::size_t i = 0; i < bump.size(); ++i) bump[i] -= m;
  return State{std::move(bump), VectorField(grid), std::nullopt, 1.0};
}

VectorField gradient_perturbation(const Grid& grid) {
  const double k = grid.k0();
  return VectorField::from_function(grid, [&](double x, double y) -> std::array<double, kDim> {
    return {k * std::cos(k * x) * std::sin(k * y), k * std::sin(k * x) * std::cos(k * y)};
  });
}

Grid build_grid(const Config& config) {
  try {
    return Grid(config.grid_n, config.grid_length);
  } catch (const PreconditionError& e) {
    throw ConfigError(fmt::format("grid.n: {}", e.what()));
  }
}

PressureLaw build_law(const Config& config) {
  return make_pressure_law(config.law_id, config.law_params);
}

SchemeConfig build_scheme(const Config& config, const Grid& grid) {
  SchemeConfig s;
  s.kind = config.scheme_kind;
  s.eps = config.scheme_eps.value_or(s.eps);
  s.mollifier = config.mollifier;
  s.literal_sandwich = config.literal_sandwich;
  if (config.init_v0_1 == "gradient") s.v0_1 = gradient_perturbation(grid);
  return s;
}

TimeControls build_controls(const Config& config) {
  TimeControls tc;
  tc.t_final = config.t_final;
  tc.cfl = config.cfl;
  tc.dt_override = config.dt_override;
  tc.splitting = config.splitting;
  tc.output_every = config.output_every;
  tc.sobolev_s = config.sobolev_s;
  return tc;
}

State build_initial_state(const Config& config) {
  const Grid grid = build_grid(config);
  const double a = config.init_amplitude;
  if (config.init_preset == "taylor_green") return taylor_green_state(grid, a);
  if (config.init_preset == "shear") return shear_state(grid, a);
  if (config.init_preset == "quiescent_density_bump") return density_bump_state(grid, a);
  if (config.init_preset == "custom_file") {
    FieldDump d = [&] {
      try {
        return read_field_dump(config.init_file);
      } catch (const Error& e) {
        throw ConfigError(fmt::format("init.file: {}", e.what()));
      }
    }();
    if (!(d.state.grid() == grid)) {
      throw ConfigError(fmt::format("init.file: dump has n = {}, config has grid.n = {}",
                                    d.state.grid().n(), grid.n()));
    }
    if (config.scheme_kind != SchemeKind::ArtificialCompressibility) d.state.p_tilde.reset();
    return d.state;
  }
  throw ConfigError("init.preset: unknown preset '" + config.init_preset + "'");
}

}  // namespace cif
