#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cif/integrate.hpp"

// Post-processing of run reports: the penalty and divergence constants, the
// eps-convergence distances, the twin-run separation, the comparison with
// the reduction oracle and the hyperbolicity scan. Every fitted constant is
// empirical.

namespace cif {

// --- Penalty / divergence constants ----------------------------------------

struct PenaltyBound {
  double max_penalty = 0.0;  // max_t ||(I - P) v||_0
  double constant = 0.0;     // max_penalty / eps
};

/// Requires a scheme-b report with penalty data; throws PreconditionError otherwise.
PenaltyBound penalty_bound_check(const RunReport& report, double eps);

struct DivergenceBound {
  double max_divergence = 0.0;  // max_t ||div v||_0
  double constant = 0.0;        // max_divergence / eps
};

/// Requires a scheme-c report with divergence data.
DivergenceBound divergence_bound_check(const RunReport& report, double eps);

/// max(values) / min(values); infinity if some value is zero.
double spread_factor(std::span<const double> values);

// --- Distances between runs ----------------------------------------------------

struct DistanceResult {
  std::vector<double> distances;
  double compare_time = 0.0;
  /// Some run ended before the others; the comparison used the common horizon.
  bool truncated = false;
  bool nonincreasing = true;
};

/// L2 distance of (rho~, v) between each run and `reference` at the latest
/// common recorded time. Runs are assumed ordered by decreasing eps;
/// `nonincreasing` reports whether the distances follow that order.
/// Throws DimensionMismatch for different grids and PreconditionError when no
/// common time with stored states exists.
DistanceResult scheme_distance(std::span<const RunReport> runs, const RunReport& reference);

/// Least-squares slope of log(distance) against log(eps).
double fit_rate(std::span<const double> eps, std::span<const double> distances);

// --- Reduction oracle ------------------------------------------------------------

struct OracleComparison {
  double v_distance = 0.0;
  double rho_distance = 0.0;
  double pressure_distance = 0.0;

  double max() const noexcept;
};

/// Relative L2 differences at the final time between a scheme-a run and a
/// reduction-oracle run. The pressure of the general run (from the elliptic
/// equation) is compared with Q - phi(rho) of the oracle run, both with their
/// means removed. Throws PreconditionError if the law has no phi or the runs
/// are of the wrong kinds.
OracleComparison oracle_compare(const RunReport& general_run, const RunReport& oracle_run,
                                const PressureLaw& law);

// --- Hyperbolicity -----------------------------------------------------------------

struct HyperbolicityReport {
  double min_f = 0.0;
  double min_f_over_rho = 0.0;
  double max_imag = 0.0;
  std::size_t min_middle_multiplicity = 0;
  std::size_t max_middle_multiplicity = 0;
  std::size_t samples = 0;
  bool hyperbolic = true;

  /// Location of the smallest f * rho seen.
  std::size_t worst_snapshot = 0;
  std::size_t worst_node = 0;
  double worst_x = 0.0;
  double worst_y = 0.0;
};

/// Samples n_samples (node, direction) pairs from each state and inspects the
/// numerically computed spectrum of the symbol. The middle eigenvalue v.xi
/// should have geometric multiplicity d - 1.
HyperbolicityReport hyperbolicity_scan(std::span<const State> trajectory, const PressureLaw& law,
                                       std::size_t n_samples, std::uint64_t seed = 12345);

// --- Uniqueness ---------------------------------------------------------------------

struct SeparationResult {
  std::vector<double> times;
  /// W(t) = mean_x A0(u~_2 + u_bar) w . w with w = u~_2 - u~_1.
  std::vector<double> weighted_separation;
  /// log W(t) - log W(0); empty if W(0) = 0.
  std::vector<double> log_growth;
  /// Slope fitted (through the origin) on the first 10% of the run.
  double early_rate = 0.0;
  /// Largest log_growth(t) - (early_rate t + log 2); <= 0 means the bound holds.
  double bound_excess = 0.0;
  bool bound_holds = true;
  /// Least-squares line a + b t through log_growth over the whole run.
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

/// Perturbation added to the second twin: delta * cos(mode_x x + mode_y y) in rho~.
struct DensityPerturbation {
  double delta = 1e-6;
  int mode_x = 1;
  int mode_y = 0;
};

/// Runs twin simulations with a shared fixed step and measures their
/// A0-weighted separation. Throws NumericalBlowup if either twin fails.
SeparationResult uniqueness_separation(const State& base, const SchemeConfig& scheme,
                                       const PressureLaw& law, const TimeControls& controls,
                                       const DensityPerturbation& perturbation);

/// W for a pair of states, A0 frozen at `second`.
double weighted_separation(const State& first, const State& second, const PressureLaw& law);

// --- Energy growth shape -----------------------------------------------------------

struct GrowthFit {
  /// log(hs(t)/hs(0)) ~ rate * t (least squares through the origin).
  double rate = 0.0;
  /// log(hs(t)/hs(0)) ~ linear * t + quadratic * t^2.
  double linear = 0.0;
  double quadratic = 0.0;
  /// max_t [log(hs(t)/hs(0)) - rate * t].
  double max_excess = 0.0;
};

/// Fits the Sobolev-norm history of a run to exponential growth.
GrowthFit fit_exponential_growth(std::span<const double> times, std::span<const double> values);

/// Gronwall-shape check of a norm history y(t) = log(hs(t)/hs(0)).
struct EnergyShape {
  /// sup_t y(t)/t: the smallest exponent with hs(t) <= hs(0) e^{c t} on the run.
  double c_hat = 0.0;
  /// The same supremum over the first 10% of the run, clipped at 0.
  double early_rate = 0.0;
  /// max_t [y(t) - early_rate t]; above log 2 counts as super-exponential.
  double excess = 0.0;
  double min_rho = 0.0;

  bool nonnegative_rate() const noexcept { return c_hat >= 0.0; }
  bool super_exponential() const noexcept;
  bool positive_density() const noexcept { return min_rho > 0.0; }
  bool ok() const noexcept {
    return nonnegative_rate() && !super_exponential() && positive_density();
  }
};

/// Throws PreconditionError for fewer than three samples or a non-positive
/// initial norm.
EnergyShape energy_shape(std::span<const double> times, std::span<const double> hs_norm,
                         std::span<const double> min_rho);
EnergyShape energy_shape(const RunReport& report);

}  // namespace cif
