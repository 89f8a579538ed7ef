#include "cif/report.hpp"

#include "cif/spectral.hpp"

namespace cif {

Snapshot measure(const State& s, double t, double sobolev_s) {
  Snapshot snap;
  snap.time = t;
  double hs = sobolev_norm(s.rho_tilde, sobolev_s);
  double acc = hs * hs;
  hs = sobolev_norm(s.v, sobolev_s);
  acc += hs * hs;
  if (s.p_tilde) {
    hs = sobolev_norm(*s.p_tilde, sobolev_s);
    acc += hs * hs;
  }
  snap.hs_norm = std::sqrt(acc);
  const double v = rms(s.v);
  snap.kinetic = 0.5 * v * v;
  snap.div_norm = rms(divergence(s.v));
  snap.penalty_norm = rms(gradient_part(s.v));
  snap.min_rho = s.min_density();
  return snap;
}

std::string_view to_string(RunFailure::Kind kind) noexcept {
  return kind == RunFailure::Kind::PositivityLoss ? "positivity_loss" : "numerical_blowup";
}

void RunReport::record(const Snapshot& snap) {
  times.push_back(snap.time);
  hs_norm.push_back(snap.hs_norm);
  kinetic.push_back(snap.kinetic);
  div_norm.push_back(snap.div_norm);
  penalty_norm.push_back(snap.penalty_norm);
  min_rho.push_back(snap.min_rho);
}

Snapshot RunReport::snapshot(std::size_t i) const {
  return {times.at(i), hs_norm.at(i), kinetic.at(i), div_norm.at(i), penalty_norm.at(i),
          min_rho.at(i)};
}

}  // namespace cif
