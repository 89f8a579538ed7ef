#include "cif/study.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include <fmt/format.h>

#include "cif/errors.hpp"

namespace cif {

StudyReport run_study(const State& initial, const SchemeConfig& base, const PressureLaw& law,
                      const TimeControls& controls, std::vector<double> eps_list,
                      double reference_eps) {
  if (eps_list.empty()) throw ConfigError("study.eps_list must not be empty");
  for (double e : eps_list) {
    if (!(e > 0.0)) throw ConfigError(fmt::format("study.eps_list: eps must be positive, got {}", e));
  }
  std::sort(eps_list.begin(), eps_list.end(), std::greater<>());
  controls.validate();

  StudyReport study;
  study.scheme = base.kind;
  study.eps_values = eps_list;

  std::vector<SchemeConfig> configs;
  for (double e : eps_list) {
    SchemeConfig c = base;
    c.eps = e;
    c.validate(law);
    configs.push_back(std::move(c));
  }
  SchemeConfig ref;
  ref.kind = SchemeKind::MollifiedProjected;
  ref.eps = reference_eps;
  ref.mollifier = base.mollifier;

  TimeControls tc = controls;
  tc.keep_snapshots = true;
  if (!tc.dt_override) {
    double dt = cfl_dt(prepare_initial_state(initial, ref), law, controls);
    for (const auto& c : configs) {
      dt = std::min(dt, cfl_dt(prepare_initial_state(initial, c), law, controls));
    }
    tc.dt_override = dt;
  }
  study.dt = *tc.dt_override;

  std::vector<std::future<RunReport>> jobs;
  for (const auto& c : configs) {
    jobs.push_back(std::async(std::launch::async,
                              [&, c] { return run_simulation(initial, c, law, tc); }));
  }
  study.reference = run_simulation(initial, ref, law, tc);
  for (auto& j : jobs) study.runs.push_back(j.get());

  study.distance = scheme_distance(study.runs, study.reference);
  bool positive = std::all_of(study.distance.distances.begin(), study.distance.distances.end(),
                              [](double d) { return d > 0.0; });
  if (study.runs.size() >= 2 && positive) {
    study.rate = fit_rate(study.eps_values, study.distance.distances);
  }

  for (std::size_t i = 0; i < study.runs.size(); ++i) {
    const auto& r = study.runs[i];
    if (base.kind == SchemeKind::ContinuousProjection) {
      study.constraint_constants.push_back(penalty_bound_check(r, study.eps_values[i]).constant);
    } else if (base.kind == SchemeKind::ArtificialCompressibility) {
      study.constraint_constants.push_back(divergence_bound_check(r, study.eps_values[i]).constant);
    }
  }
  return study;
}

OraclePair run_oracle_pair(const State& initial, const PressureLaw& law,
                           const TimeControls& controls, double eps, MollifierKind mollifier) {
  SchemeConfig general;
  general.kind = SchemeKind::MollifiedProjected;
  general.eps = eps;
  general.mollifier = mollifier;
  SchemeConfig oracle;
  oracle.kind = SchemeKind::ReductionOracle;
  oracle.validate(law);

  TimeControls tc = controls;
  if (!tc.dt_override) tc.dt_override = cfl_dt(initial, law, controls);

  OraclePair pair;
  pair.general = run_simulation(initial, general, law, tc);
  pair.oracle = run_simulation(initial, oracle, law, tc);
  pair.comparison = oracle_compare(pair.general, pair.oracle, law);
  return pair;
}

}  // namespace cif
