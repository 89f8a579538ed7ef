#include "cif/integrate.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "cif/errors.hpp"
#include "cif/spectral.hpp"

namespace cif {
namespace {

constexpr std::size_t kMaxSteps = 10'000'000;

void require_finite(const State& s, const char* where) {
  if (!s.all_finite()) throw NumericalBlowup(std::string(where) + ": non-finite state");
}

State penalty_flow(const State& s, double eps, double dt) {
  const VectorField solenoidal = leray_project(s.v);
  VectorField grad = s.v - solenoidal;
  State out = s;
  out.v = solenoidal;
  out.v.axpy(std::exp(-dt / eps), grad);
  return out;
}

State acoustic_flow(const State& s, double eps, double dt) {
  if (!s.p_tilde) throw PreconditionError("acoustic substep needs a p_tilde block");
  const Grid& g = s.grid();
  auto p_hat = transform_forward(*s.p_tilde);
  auto v_hat = transform_forward(s.v);
  const std::complex<double> i_unit(0.0, 1.0);
  const std::size_t n = g.n();
  for (std::size_t jy = 0; jy < n; ++jy) {
    for (std::size_t jx = 0; jx < n; ++jx) {
      const std::size_t i = jy * n + jx;
      const double kx = g.derivative_wavenumber(jx);
      const double ky = g.derivative_wavenumber(jy);
      const double k = std::hypot(kx, ky);
      if (k == 0.0) continue;
      const double ux = kx / k;
      const double uy = ky / k;
      const std::complex<double> w = ux * v_hat[0][i] + uy * v_hat[1][i];
      const std::complex<double> p = p_hat[i];
      const double theta = k * dt / eps;
      const double c = std::cos(theta);
      const double sn = std::sin(theta);
      const std::complex<double> p_new = c * p - i_unit * sn * w;
      const std::complex<double> w_new = -i_unit * sn * p + c * w;
      p_hat[i] = p_new;
      v_hat[0][i] += ux * (w_new - w);
      v_hat[1][i] += uy * (w_new - w);
    }
  }
  State out = s;
  out.p_tilde = transform_inverse(p_hat);
  out.v = transform_inverse(v_hat);
  return out;
}

}  // namespace

void TimeControls::validate() const {
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw ConfigError(fmt::format("time.t_final must be >= 0, got {}", t_final));
  }
  if (!(cfl > 0.0 && cfl <= 1.0)) {
    throw ConfigError(fmt::format("time.cfl must lie in (0, 1], got {}", cfl));
  }
  if (dt_override && !(*dt_override > 0.0)) {
    throw ConfigError(fmt::format("time.dt_override must be positive, got {}", *dt_override));
  }
  if (output_every == 0) throw ConfigError("output.every_steps must be >= 1");
  if (!(sobolev_s >= 0.0)) throw ConfigError("output.sobolev_s must be >= 0");
}

double cfl_dt(const State& state, const PressureLaw& law, const TimeControls& controls,
              std::optional<double> unsplit_acoustic_eps) {
  const ScalarField rho = state.density();
  require_positive_density(rho, "cfl_dt");
  const ScalarField f = law.evaluate(rho, state.v);
  double speed = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const double fr = f[i] * rho[i];
    if (fr < 0.0) {
      throw HyperbolicityLoss(fmt::format("cfl_dt: f * rho = {:.6g} < 0 at node {}", fr, i));
    }
    speed = std::max(speed, std::abs(state.v[0][i]) + std::abs(state.v[1][i]) + std::sqrt(fr));
  }
  const double dx = state.grid().dx();
  double dt = speed > 0.0 ? controls.cfl * dx / speed : controls.cfl * dx;
  if (unsplit_acoustic_eps) dt = std::min(dt, controls.cfl * *unsplit_acoustic_eps * dx);
  if (controls.dt_override) {
    if (*controls.dt_override > dt) {
      spdlog::warn("dt_override {:.6g} exceeds the CFL step {:.6g}", *controls.dt_override, dt);
    }
    return *controls.dt_override;
  }
  return dt;
}

State rk4_step(const State& state, const RhsFn& rhs, double dt) {
  const Tendency k1 = rhs(state);
  if (!k1.all_finite()) throw NumericalBlowup("rk4: non-finite stage 1");
  const Tendency k2 = rhs(advance(state, 0.5 * dt, k1));
  if (!k2.all_finite()) throw NumericalBlowup("rk4: non-finite stage 2");
  const Tendency k3 = rhs(advance(state, 0.5 * dt, k2));
  if (!k3.all_finite()) throw NumericalBlowup("rk4: non-finite stage 3");
  const Tendency k4 = rhs(advance(state, dt, k3));
  if (!k4.all_finite()) throw NumericalBlowup("rk4: non-finite stage 4");

  Tendency sum = k1;
  sum.axpy(2.0, k2);
  sum.axpy(2.0, k3);
  sum += k4;
  State out = advance(state, dt / 6.0, sum);
  require_finite(out, "rk4");
  return out;
}

State stiff_exact_substep(const State& state, const StiffOperator& op, double dt) {
  switch (op.kind) {
    case StiffOperator::Kind::None:
      return state;
    case StiffOperator::Kind::ProjectionPenalty:
      return penalty_flow(state, op.eps, dt);
    case StiffOperator::Kind::AcousticPair:
      return acoustic_flow(state, op.eps, dt);
  }
  throw PreconditionError("stiff_exact_substep: unknown operator");
}

State split_step(const State& state, const RhsFn& nonstiff, const StiffOperator& op, double dt,
                 Splitting splitting) {
  if (op.kind == StiffOperator::Kind::None) return rk4_step(state, nonstiff, dt);
  if (splitting == Splitting::Lie) {
    return stiff_exact_substep(rk4_step(state, nonstiff, dt), op, dt);
  }
  State s = stiff_exact_substep(state, op, 0.5 * dt);
  s = rk4_step(s, nonstiff, dt);
  return stiff_exact_substep(s, op, 0.5 * dt);
}

State prepare_initial_state(const State& initial, const SchemeConfig& scheme) {
  State s = initial;
  const bool compressible = scheme.kind == SchemeKind::ContinuousProjection ||
                            scheme.kind == SchemeKind::ArtificialCompressibility;
  if (scheme.v0_1) {
    if (!compressible) {
      throw ConfigError("v0_1 is only meaningful for schemes b and c");
    }
    try {
      s.v = slightly_compressible_init(initial.v, *scheme.v0_1, scheme.eps);
    } catch (const PreconditionError& e) {
      throw ConfigError(e.what());
    }
  }
  if (scheme.kind == SchemeKind::ArtificialCompressibility) {
    if (!s.p_tilde) s.p_tilde = scheme.p_tilde_0.value_or(ScalarField(initial.grid()));
  } else if (s.p_tilde) {
    throw ConfigError("p_tilde block present for a scheme other than c");
  }
  if (scheme.p_tilde_0 && scheme.kind != SchemeKind::ArtificialCompressibility) {
    throw ConfigError("p_tilde_0 is only meaningful for scheme c");
  }
  return s;
}

RunReport run_simulation(const State& initial, const SchemeConfig& scheme,
                         const PressureLaw& law, const TimeControls& controls) {
  controls.validate();
  scheme.validate(law);

  RunReport report;
  report.scheme = scheme.kind;
  report.eps = scheme.eps;
  report.law_id = law.id;
  report.sobolev_s = controls.sobolev_s;
  report.v0_1 = scheme.v0_1;

  State state = prepare_initial_state(initial, scheme);
  try {
    require_positive_density(state.density(), "initial state");
  } catch (const PositivityLoss& e) {
    throw ConfigError(e.what());
  }
  require_finite(state, "initial state");

  auto keep = [&](const State& s, double t) {
    report.record(measure(s, t, controls.sobolev_s));
    if (controls.keep_snapshots) report.snapshots.push_back(s);
  };
  keep(state, 0.0);

  const RhsFn nonstiff = [&](const State& s) { return evaluate_scheme(scheme, s, law).nonstiff; };
  const StiffOperator op = stiff_operator(scheme);

  std::optional<double> fixed_dt;
  std::size_t fixed_steps = 0;
  if (controls.dt_override && controls.t_final > 0.0) {
    const double want = cfl_dt(state, law, controls);
    fixed_steps = static_cast<std::size_t>(std::ceil(controls.t_final / want - 1e-9));
    fixed_steps = std::max<std::size_t>(fixed_steps, 1);
    fixed_dt = controls.t_final / static_cast<double>(fixed_steps);
  }

  double t = 0.0;
  std::size_t step = 0;
  try {
    while (fixed_dt ? step < fixed_steps : t < controls.t_final) {
      if (step >= kMaxSteps) throw NumericalBlowup("step limit reached; time step collapsed");
      double dt;
      if (fixed_dt) {
        dt = *fixed_dt;
      } else {
        dt = cfl_dt(state, law, controls);
        if (t + dt >= controls.t_final * (1.0 - 1e-12)) dt = controls.t_final - t;
      }
      State next = split_step(state, nonstiff, op, dt, controls.splitting);
      require_positive_density(next.density(), "step");
      ++step;
      t = fixed_dt ? static_cast<double>(step) * *fixed_dt : t + dt;
      if (!fixed_dt && t >= controls.t_final * (1.0 - 1e-12)) t = controls.t_final;
      state = std::move(next);
      const bool last = fixed_dt ? step == fixed_steps : t >= controls.t_final;
      if (step % controls.output_every == 0 || last) keep(state, t);
    }
  } catch (const PositivityLoss& e) {
    report.failure = RunFailure{RunFailure::Kind::PositivityLoss, t, e.what()};
    spdlog::warn("run stopped at t={:.6g}: {}", t, e.what());
  } catch (const NumericalBlowup& e) {
    report.failure = RunFailure{RunFailure::Kind::NumericalBlowup, t, e.what()};
    spdlog::warn("run stopped at t={:.6g}: {}", t, e.what());
  }
  if (report.failure && (report.times.empty() || report.times.back() < t)) {
    keep(state, t);
  }
  report.steps = step;
  report.final_state = std::move(state);
  return report;
}

}  // namespace cif
