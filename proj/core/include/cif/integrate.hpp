#pragma once

#include <functional>
#include <optional>

#include "cif/report.hpp"

namespace cif {

enum class Splitting { Strang, Lie };

struct TimeControls {
  double t_final = 0.5;
  double cfl = 0.4;
  /// Fixed step. The run uses ceil(t_final / dt) equal steps of at most dt.
  std::optional<double> dt_override;
  Splitting splitting = Splitting::Strang;
  /// Record diagnostics every this many steps (the final step is always recorded).
  std::size_t output_every = 1;
  double sobolev_s = 3.0;
  bool keep_snapshots = false;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

/// cfl * dx / max_nodes(|v_1| + |v_2| + sqrt(f rho)).
///
/// With dt_override set the override is returned unchanged (a warning is
/// logged if it exceeds the CFL value). `unsplit_acoustic_eps` caps the step
/// by cfl * eps * dx for artificial-compressibility runs whose acoustic part
/// is not integrated exactly.
double cfl_dt(const State& state, const PressureLaw& law, const TimeControls& controls,
              std::optional<double> unsplit_acoustic_eps = std::nullopt);

using RhsFn = std::function<Tendency(const State&)>;

/// Classical fourth-order Runge-Kutta step. Throws NumericalBlowup if a stage
/// or the result is not finite.
State rk4_step(const State& state, const RhsFn& rhs, double dt);

/// Exact flow of the stiff operator over dt:
///   ProjectionPenalty: v <- P v + exp(-dt/eps) (I - P) v
///   AcousticPair: per mode, (P~, xi.v/|xi|) rotate at frequency |xi|/eps;
///                 the solenoidal part of v is untouched.
State stiff_exact_substep(const State& state, const StiffOperator& op, double dt);

/// One split step: stiff(dt/2) RK4(dt) stiff(dt/2) for Strang, RK4(dt)
/// stiff(dt) for Lie. With a None operator this is exactly rk4_step.
State split_step(const State& state, const RhsFn& nonstiff, const StiffOperator& op, double dt,
                 Splitting splitting);

/// Prepares the scheme's initial state: v0 + eps v0_1 for b/c, a p_tilde
/// block for c. Throws ConfigError on inconsistent input.
State prepare_initial_state(const State& initial, const SchemeConfig& scheme);

/// Advances `initial` to controls.t_final. Physical failures (positivity,
/// blow-up) end the run early and are recorded in the report together with
/// the last valid state; configuration problems throw ConfigError.
RunReport run_simulation(const State& initial, const SchemeConfig& scheme,
                         const PressureLaw& law, const TimeControls& controls);

}  // namespace cif
