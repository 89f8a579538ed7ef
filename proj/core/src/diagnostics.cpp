#include "cif/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "cif/errors.hpp"
#include "cif/symbol.hpp"

namespace cif {
namespace {

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

const State& state_at(const RunReport& r, std::size_t i) {
  if (!r.snapshots.empty()) return r.snapshots.at(i);
  return *r.final_state;
}

// Index of the recorded time matching t, if the run stored a state there.
std::optional<std::size_t> find_time(const RunReport& r, double t) {
  const double tol = 1e-9 * std::max(1.0, std::abs(t));
  if (!r.snapshots.empty()) {
    for (std::size_t i = 0; i < r.times.size() && i < r.snapshots.size(); ++i) {
      if (std::abs(r.times[i] - t) <= tol) return i;
    }
    return std::nullopt;
  }
  if (r.final_state && !r.times.empty() && std::abs(r.times.back() - t) <= tol) {
    return r.times.size() - 1;
  }
  return std::nullopt;
}

double relative_l2(const ScalarField& a, const ScalarField& b) {
  const double diff = rms(a - b);
  const double ref = rms(b);
  return ref > 0.0 ? diff / ref : diff;
}

double relative_l2(const VectorField& a, const VectorField& b) {
  const double diff = rms(a - b);
  const double ref = rms(b);
  return ref > 0.0 ? diff / ref : diff;
}

ScalarField remove_mean(ScalarField f) {
  const double m = f.mean();
  for (std::size_t i = 0; i < f.size(); ++i) f[i] -= m;
  return f;
}

}  // namespace

PenaltyBound penalty_bound_check(const RunReport& report, double eps) {
  if (report.scheme != SchemeKind::ContinuousProjection) {
    throw PreconditionError("penalty_bound_check: report is not from scheme b");
  }
  if (report.penalty_norm.empty()) throw PreconditionError("penalty_bound_check: no penalty data");
  if (!(eps > 0.0)) throw PreconditionError("penalty_bound_check: eps must be positive");
  PenaltyBound b;
  b.max_penalty = max_of(report.penalty_norm);
  b.constant = b.max_penalty / eps;
  return b;
}

DivergenceBound divergence_bound_check(const RunReport& report, double eps) {
  if (report.scheme != SchemeKind::ArtificialCompressibility) {
    throw PreconditionError("divergence_bound_check: report is not from scheme c");
  }
  if (report.div_norm.empty()) throw PreconditionError("divergence_bound_check: no divergence data");
  if (!(eps > 0.0)) throw PreconditionError("divergence_bound_check: eps must be positive");
  DivergenceBound b;
  b.max_divergence = max_of(report.div_norm);
  b.constant = b.max_divergence / eps;
  return b;
}

double spread_factor(std::span<const double> values) {
  if (values.empty()) throw PreconditionError("spread_factor: no values");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo <= 0.0) return std::numeric_limits<double>::infinity();
  return *hi / *lo;
}

DistanceResult scheme_distance(std::span<const RunReport> runs, const RunReport& reference) {
  if (runs.empty()) throw PreconditionError("scheme_distance: no runs");
  if (!reference.final_state) throw PreconditionError("scheme_distance: reference has no state");
  const Grid& g = reference.final_state->grid();
  double horizon = reference.final_time();
  for (const auto& r : runs) {
    if (!r.final_state) throw PreconditionError("scheme_distance: run has no state");
    if (!(r.final_state->grid() == g)) {
      throw DimensionMismatch("scheme_distance: runs use different grids");
    }
    horizon = std::min(horizon, r.final_time());
  }

  DistanceResult out;
  for (const auto& r : runs) {
    if (r.final_time() > horizon + 1e-12) out.truncated = true;
  }
  if (reference.final_time() > horizon + 1e-12) out.truncated = true;

  // Latest time not after the horizon at which every run stored a state.
  std::optional<double> when;
  for (std::size_t k = reference.times.size(); k-- > 0;) {
    const double t = reference.times[k];
    if (t > horizon + 1e-12) continue;
    if (!find_time(reference, t)) continue;
    const bool all = std::all_of(runs.begin(), runs.end(),
                                 [&](const RunReport& r) { return find_time(r, t).has_value(); });
    if (all) {
      when = t;
      break;
    }
  }
  if (!when) {
    throw PreconditionError("scheme_distance: runs share no recorded time with a stored state");
  }
  if (out.truncated) {
    spdlog::warn("scheme_distance: horizons differ, comparing at t={:.6g}", *when);
  }
  out.compare_time = *when;

  const State& ref = state_at(reference, *find_time(reference, *when));
  for (const auto& r : runs) {
    const State& s = state_at(r, *find_time(r, *when));
    const double dr = rms(s.rho_tilde - ref.rho_tilde);
    const double dv = rms(s.v - ref.v);
    out.distances.push_back(std::sqrt(dr * dr + dv * dv));
  }
  for (std::size_t i = 1; i < out.distances.size(); ++i) {
    if (out.distances[i] > out.distances[i - 1]) out.nonincreasing = false;
  }
  return out;
}

double fit_rate(std::span<const double> eps, std::span<const double> distances) {
  if (eps.size() != distances.size() || eps.size() < 2) {
    throw PreconditionError("fit_rate: need at least two matching (eps, distance) pairs");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0) || !(distances[i] > 0.0)) {
      throw PreconditionError("fit_rate: eps and distances must be positive");
    }
    const double x = std::log(eps[i]);
    const double y = std::log(distances[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw PreconditionError("fit_rate: eps values are all equal");
  return (n * sxy - sx * sy) / den;
}

double OracleComparison::max() const noexcept {
  return std::max({v_distance, rho_distance, pressure_distance});
}

OracleComparison oracle_compare(const RunReport& general_run, const RunReport& oracle_run,
                                const PressureLaw& law) {
  if (!law.has_phi()) {
    throw PreconditionError("oracle_compare: law '" + law.id + "' has no phi(rho)");
  }
  if (general_run.scheme != SchemeKind::MollifiedProjected) {
    throw PreconditionError("oracle_compare: general run must come from scheme a");
  }
  if (oracle_run.scheme != SchemeKind::ReductionOracle) {
    throw PreconditionError("oracle_compare: second run must come from the reduction oracle");
  }
  if (!general_run.final_state || !oracle_run.final_state) {
    throw PreconditionError("oracle_compare: runs carry no final state");
  }
  if (!general_run.succeeded() || !oracle_run.succeeded()) {
    throw PreconditionError("oracle_compare: a run did not reach its final time");
  }
  const State& a = *general_run.final_state;
  const State& b = *oracle_run.final_state;
  require_same_grid(a.grid(), b.grid(), "oracle_compare");

  OracleComparison c;
  c.v_distance = relative_l2(a.v, b.v);
  c.rho_distance = relative_l2(a.rho_tilde, b.rho_tilde);
  c.pressure_distance = relative_l2(remove_mean(recover_pressure(a, law)),
                                    remove_mean(oracle_pressure(b, law)));
  return c;
}

HyperbolicityReport hyperbolicity_scan(std::span<const State> trajectory, const PressureLaw& law,
                                       std::size_t n_samples, std::uint64_t seed) {
  if (trajectory.empty()) throw PreconditionError("hyperbolicity_scan: empty trajectory");
  if (n_samples == 0) throw PreconditionError("hyperbolicity_scan: n_samples must be positive");

  HyperbolicityReport out;
  out.min_f = std::numeric_limits<double>::infinity();
  out.min_f_over_rho = std::numeric_limits<double>::infinity();
  out.min_middle_multiplicity = std::numeric_limits<std::size_t>::max();
  double worst = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    const State& s = trajectory[k];
    const Grid& g = s.grid();
    const ScalarField rho = s.density();
    const ScalarField f = law.evaluate(rho, s.v);
    std::uniform_int_distribution<std::size_t> node(0, g.size() - 1);

    // Nodewise extremes over the whole state, not just the samples.
    for (std::size_t i = 0; i < g.size(); ++i) {
      out.min_f = std::min(out.min_f, f[i]);
      out.min_f_over_rho = std::min(out.min_f_over_rho, f[i] / rho[i]);
      if (f[i] * rho[i] < worst) {
        worst = f[i] * rho[i];
        out.worst_snapshot = k;
        out.worst_node = i;
        out.worst_x = g.x(i % g.n());
        out.worst_y = g.y(i / g.n());
      }
    }

    for (std::size_t m = 0; m < n_samples; ++m) {
      const std::size_t i = node(rng);
      const double a = angle(rng);
      const std::array<double, 2> xi{std::cos(a), std::sin(a)};
      const std::array<double, 2> v{s.v[0][i], s.v[1][i]};
      const Eigen::MatrixXd sym = assemble_symbol(rho[i], v, f[i], xi);
      for (const auto& lam : eigenvalues_numerical(sym)) {
        out.max_imag = std::max(out.max_imag, std::abs(lam.imag()));
      }
      const double middle = v[0] * xi[0] + v[1] * xi[1];
      const std::size_t mult = geometric_multiplicity(sym, middle, 1e-9);
      out.min_middle_multiplicity = std::min(out.min_middle_multiplicity, mult);
      out.max_middle_multiplicity = std::max(out.max_middle_multiplicity, mult);
      ++out.samples;
    }
  }
  out.hyperbolic = out.min_f > 0.0 && out.max_imag <= 1e-8 &&
                   out.min_middle_multiplicity == kDim - 1 &&
                   out.max_middle_multiplicity == kDim - 1;
  return out;
}

double weighted_separation(const State& first, const State& second, const PressureLaw& law) {
  require_same_grid(first.grid(), second.grid(), "weighted_separation");
  const ScalarField rho = second.density();
  const ScalarField f = law.evaluate(rho, second.v);
  double sum = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const double wr = second.rho_tilde[i] - first.rho_tilde[i] + (second.rho_bar - first.rho_bar);
    const double w1 = second.v[0][i] - first.v[0][i];
    const double w2 = second.v[1][i] - first.v[1][i];
    sum += f[i] / rho[i] * wr * wr + w1 * w1 + w2 * w2;
    if (first.p_tilde && second.p_tilde) {
      const double wp = (*second.p_tilde)[i] - (*first.p_tilde)[i];
      sum += wp * wp;
    }
  }
  return sum / static_cast<double>(rho.size());
}

SeparationResult uniqueness_separation(const State& base, const SchemeConfig& scheme,
                                       const PressureLaw& law, const TimeControls& controls,
                                       const DensityPerturbation& perturbation) {
  if (!(perturbation.delta >= 0.0)) {
    throw PreconditionError("uniqueness_separation: delta must be >= 0");
  }
  State twin = base;
  const Grid& g = base.grid();
  for (std::size_t iy = 0; iy < g.n(); ++iy) {
    for (std::size_t ix = 0; ix < g.n(); ++ix) {
      twin.rho_tilde.at(ix, iy) +=
          perturbation.delta * std::cos(perturbation.mode_x * g.x(ix) + perturbation.mode_y * g.y(iy));
    }
  }

  TimeControls tc = controls;
  tc.keep_snapshots = true;
  if (!tc.dt_override) {
    const State a = prepare_initial_state(base, scheme);
    const State b = prepare_initial_state(twin, scheme);
    tc.dt_override = std::min(cfl_dt(a, law, controls), cfl_dt(b, law, controls));
  }
  const RunReport r1 = run_simulation(base, scheme, law, tc);
  const RunReport r2 = run_simulation(twin, scheme, law, tc);
  for (const RunReport* r : {&r1, &r2}) {
    if (!r->succeeded()) {
      throw NumericalBlowup(fmt::format("uniqueness_separation: twin stopped at t={:.6g}: {}",
                                        r->failure->time, r->failure->message));
    }
  }
  if (r1.times.size() != r2.times.size()) {
    throw PreconditionError("uniqueness_separation: twins recorded different times");
  }

  SeparationResult out;
  out.times = r1.times;
  for (std::size_t i = 0; i < r1.snapshots.size(); ++i) {
    out.weighted_separation.push_back(weighted_separation(r1.snapshots[i], r2.snapshots[i], law));
  }
  const double w0 = out.weighted_separation.front();
  if (!(w0 > 0.0)) return out;
  for (double w : out.weighted_separation) out.log_growth.push_back(std::log(w / w0));

  const std::size_t n = out.times.size();
  const double t_end = out.times.back();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 1; i < n && out.times[i] <= 0.1 * t_end + 1e-12; ++i) {
    num += out.times[i] * out.log_growth[i];
    den += out.times[i] * out.times[i];
  }
  if (den == 0.0 && n > 1) {
    num = out.times[1] * out.log_growth[1];
    den = out.times[1] * out.times[1];
  }
  out.early_rate = den > 0.0 ? std::max(0.0, num / den) : 0.0;

  out.bound_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    out.bound_excess = std::max(out.bound_excess, out.log_growth[i] - (out.early_rate * out.times[i] +
                                                                       std::log(2.0)));
  }
  out.bound_holds = out.bound_excess <= 0.0;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += out.times[i];
    sy += out.log_growth[i];
    sxx += out.times[i] * out.times[i];
    sxy += out.times[i] * out.log_growth[i];
  }
  const double dn = static_cast<double>(n);
  const double d = dn * sxx - sx * sx;
  if (d > 0.0) {
    out.slope = (dn * sxy - sx * sy) / d;
    out.intercept = (sy - out.slope * sx) / dn;
  }
  double r2sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = out.log_growth[i] - (out.intercept + out.slope * out.times[i]);
    r2sum += e * e;
  }
  out.rms_residual = std::sqrt(r2sum / dn);
  return out;
}

GrowthFit fit_exponential_growth(std::span<const double> times, std::span<const double> values) {
  if (times.size() != values.size() || times.size() < 3) {
    throw PreconditionError("fit_exponential_growth: need at least three matching samples");
  }
  if (!(values.front() > 0.0)) throw PreconditionError("fit_exponential_growth: initial value must be positive");
  std::vector<double> y(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) throw PreconditionError("fit_exponential_growth: values must be positive");
    y[i] = std::log(values[i] / values.front());
  }

  GrowthFit fit;
  double tt = 0.0, ty = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    tt += times[i] * times[i];
    ty += times[i] * y[i];
  }
  fit.rate = tt > 0.0 ? ty / tt : 0.0;

  // y ~ a t + b t^2 via the 2x2 normal equations.
  double s2 = 0, s3 = 0, s4 = 0, y1 = 0, y2 = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double t = times[i];
    s2 += t * t;
    s3 += t * t * t;
    s4 += t * t * t * t;
    y1 += t * y[i];
    y2 += t * t * y[i];
  }
  const double det = s2 * s4 - s3 * s3;
  if (det > 0.0) {
    fit.linear = (y1 * s4 - y2 * s3) / det;
    fit.quadratic = (s2 * y2 - s3 * y1) / det;
  }
  fit.max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < y.size(); ++i) {
    fit.max_excess = std::max(fit.max_excess, y[i] - fit.rate * times[i]);
  }
  return fit;
}

bool EnergyShape::super_exponential() const noexcept { return excess > std::log(2.0); }

EnergyShape energy_shape(std::span<const double> times, std::span<const double> hs_norm,
                         std::span<const double> min_rho) {
  if (times.size() != hs_norm.size() || times.size() < 3) {
    throw PreconditionError("energy_shape: need at least three matching samples");
  }
  if (!(hs_norm.front() > 0.0)) throw PreconditionError("energy_shape: initial norm must be positive");
  const double t_end = times.back();
  EnergyShape e;
  e.c_hat = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double y = std::log(hs_norm[i] / hs_norm.front());
    const double rate = y / times[i];
    e.c_hat = std::max(e.c_hat, rate);
    if (times[i] <= 0.1 * t_end + 1e-12 || i == 1) e.early_rate = std::max(e.early_rate, rate);
  }
  e.excess = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double y = std::log(hs_norm[i] / hs_norm.front());
    e.excess = std::max(e.excess, y - e.early_rate * times[i]);
  }
  e.min_rho = min_rho.empty() ? 0.0 : *std::min_element(min_rho.begin(), min_rho.end());
  return e;
}

EnergyShape energy_shape(const RunReport& report) {
  return energy_shape(report.times, report.hs_norm, report.min_rho);
}

}  // namespace cif
