#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cif/schemes.hpp"

namespace cif {

/// Scalar diagnostics of one state.
struct Snapshot {
  double time = 0.0;
  double hs_norm = 0.0;       // ||u~||_s
  double kinetic = 0.0;       // 0.5 ||v||_0^2
  double div_norm = 0.0;      // ||div v||_0
  double penalty_norm = 0.0;  // ||(I - P) v||_0
  double min_rho = 0.0;
};

/// Measures `s` at time t. The Sobolev norm covers rho~, v and p_tilde.
Snapshot measure(const State& s, double t, double sobolev_s = 3.0);

struct RunFailure {
  enum class Kind { PositivityLoss, NumericalBlowup };
  Kind kind;
  /// Last time at which the state was valid.
  double time;
  std::string message;
};

std::string_view to_string(RunFailure::Kind kind) noexcept;

/// Time series of one run. Column vectors share the index of `times`.
struct RunReport {
  SchemeKind scheme = SchemeKind::MollifiedProjected;
  double eps = 0.0;
  std::string law_id;
  double sobolev_s = 3.0;
  std::size_t steps = 0;

  std::vector<double> times;
  std::vector<double> hs_norm;
  std::vector<double> kinetic;
  std::vector<double> div_norm;
  std::vector<double> penalty_norm;
  std::vector<double> min_rho;

  std::optional<RunFailure> failure;
  std::optional<State> final_state;
  /// Compressible initial perturbation used by the run, if any.
  std::optional<VectorField> v0_1;
  /// States at each recorded time, kept when TimeControls::keep_snapshots.
  std::vector<State> snapshots;

  bool succeeded() const noexcept { return !failure.has_value(); }
  double final_time() const noexcept { return times.empty() ? 0.0 : times.back(); }
  void record(const Snapshot& snap);
  Snapshot snapshot(std::size_t i) const;
};

}  // namespace cif
