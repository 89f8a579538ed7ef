#pragma once

#include <vector>

#include "cif/diagnostics.hpp"

namespace cif {

/// eps value used for the incompressible reference run (scheme a).
inline constexpr double kReferenceEps = 1e-6;

struct StudyReport {
  SchemeKind scheme = SchemeKind::MollifiedProjected;
  /// Sorted in decreasing order.
  std::vector<double> eps_values;
  std::vector<RunReport> runs;
  RunReport reference;
  /// Common fixed step shared by every run and the reference.
  double dt = 0.0;

  DistanceResult distance;
  /// Slope of log(distance) against log(eps).
  double rate = 0.0;
  /// Scheme b: max ||(I - P) v|| / eps per run. Scheme c: max ||div v|| / eps.
  std::vector<double> constraint_constants;
};

/// Runs `base` once per eps (concurrently) and a scheme-a reference with
/// reference_eps, all with one fixed step: the smallest CFL step over the
/// prepared initial states, or controls.dt_override. Snapshots are kept.
/// Throws ConfigError for an empty or non-positive eps list.
StudyReport run_study(const State& initial, const SchemeConfig& base, const PressureLaw& law,
                      const TimeControls& controls, std::vector<double> eps_list,
                      double reference_eps = kReferenceEps);

struct OraclePair {
  RunReport general;
  RunReport oracle;
  OracleComparison comparison;
};

/// Scheme a with `eps` and the reduction oracle from the same initial data
/// and the same fixed step.
OraclePair run_oracle_pair(const State& initial, const PressureLaw& law,
                           const TimeControls& controls, double eps = kReferenceEps,
                           MollifierKind mollifier = MollifierKind::gaussian());

}  // namespace cif
