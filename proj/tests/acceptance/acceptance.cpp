// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Usage: cif_acceptance [criterion ...]   (no arguments runs all ten)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "cif/errors.hpp"
#include "cif/io.hpp"
#include "cif/model.hpp"
#include "cif/setup.hpp"
#include "cif/study.hpp"
#include "cif/symbol.hpp"
#include "test_support.hpp"

using namespace cif;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

// Benchmark problem shared by criteria 4-8.
constexpr std::size_t kN = 64;
constexpr double kT = 0.5;
const std::vector<double> kEpsSweep{0.2, 0.1, 0.05, 0.025};

State benchmark_state() { return taylor_green_state(Grid(kN), 0.1); }

TimeControls benchmark_controls() {
  TimeControls tc;
  tc.t_final = kT;
  return tc;
}

const StudyReport& sweep(SchemeKind kind) {
  static std::map<SchemeKind, StudyReport> cache;
  auto it = cache.find(kind);
  if (it == cache.end()) {
    SchemeConfig base;
    base.kind = kind;
    base.eps = kEpsSweep.front();
    it = cache
             .emplace(kind, run_study(benchmark_state(), base, make_pressure_law("kinetic"),
                                      benchmark_controls(), kEpsSweep))
             .first;
  }
  return it->second;
}

// --- 1. projector algebra ------------------------------------------------------

Outcome projector_algebra() {
  test::Rng rng(20240601);
  double worst = 0.0;
  const char* worst_what = "";
  auto track = [&](double err, const char* what) {
    if (err > worst) {
      worst = err;
      worst_what = what;
    }
  };
  for (int k = 0; k < 200; ++k) {
    const Grid g(k % 2 == 0 ? 32 : 64);
    const VectorField v = test::random_smooth_vector(g, rng);
    const ScalarField q = test::random_smooth_field(g, rng);
    const double eps = test::uniform(rng, 0.01, 0.5);
    const MollifierKind moll = k % 3 == 0 ? MollifierKind::sharp_cutoff() : MollifierKind::gaussian();

    const VectorField pv = leray_project(v);
    track(rms(leray_project(pv) - pv), "idempotence");
    track(rms(divergence(pv)), "divergence annihilation");
    track(std::abs(inner(pv, v - pv)), "Hodge orthogonality");
    const double n2 = rms(v) * rms(v);
    const double a = rms(pv), b = rms(v - pv);
    track(std::abs(a * a + b * b - n2), "Pythagoras");
    track(rms(mollify(pv, eps, moll) - leray_project(mollify(v, eps, moll))),
          "mollifier commutation (velocity)");
    // Block projector diag(Id, P) against the block mollifier.
    const Tendency raw{q, v, std::nullopt};
    const Tendency jp = block_project(Tendency{mollify(q, eps, moll), mollify(v, eps, moll), std::nullopt});
    const Tendency pj = block_project(raw);
    track(std::max(rms(jp.rho_tilde - mollify(pj.rho_tilde, eps, moll)),
                   rms(jp.v - mollify(pj.v, eps, moll))),
          "block projector commutation");
    track(rms(gradient(mollify(q, eps, moll))[0] - mollify(gradient(q), eps, moll)[0]),
          "mollifier commutes with d/dx");
  }
  return {worst <= 1e-10, fmt::format("200 fields, max error {:.2e} ({})", worst, worst_what)};
}

// --- 2. symbol suite -----------------------------------------------------------------

Outcome symbol_suite() {
  test::Rng rng(7);
  double eig_err = 0.0, imag = 0.0, sym = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double rho = test::uniform(rng, 0.1, 5.0);
    const std::array<double, 2> v{test::uniform(rng, -3, 3), test::uniform(rng, -3, 3)};
    const double f = test::uniform(rng, 0.01, 10.0);
    const double ang = test::uniform(rng, 0, 2 * std::numbers::pi);
    const double mag = test::uniform(rng, 0.1, 10.0);
    const std::array<double, 2> xi{mag * std::cos(ang), mag * std::sin(ang)};

    const auto closed = eigenvalues_closed_form(rho, v, f, xi);
    const auto num = eigenvalues_numerical(assemble_symbol(rho, v, f, xi));
    for (std::size_t i = 0; i < closed.size(); ++i) {
      eig_err = std::max(eig_err, std::abs(closed[i] - num[i].real()));
      imag = std::max(imag, std::abs(num[i].imag()));
    }
    const Eigen::MatrixXd a0 = symmetrizer(rho, f, 3).matrix();
    const Eigen::MatrixXd a0c = symmetrizer(rho, f, 4).matrix();
    for (std::size_t j = 0; j < 2; ++j) {
      sym = std::max(sym, asymmetry(a0 * flux_matrix(j, rho, v, f)));
      sym = std::max(sym, asymmetry(a0c * acoustic_flux_matrix(j, rho, v, f, 0.05)));
    }
  }
  int flagged = 0;
  const int negatives = 200;
  for (int k = 0; k < negatives; ++k) {
    const double rho = test::uniform(rng, 0.1, 5.0);
    const std::array<double, 2> v{test::uniform(rng, -3, 3), test::uniform(rng, -3, 3)};
    const double f = -test::uniform(rng, 0.01, 10.0);
    const std::array<double, 2> xi{test::uniform(rng, 0.1, 2), test::uniform(rng, -2, 2)};
    bool threw = false;
    try {
      eigenvalues_closed_form(rho, v, f, xi);
    } catch (const HyperbolicityLoss&) {
      threw = true;
    }
    double mi = 0.0;
    for (const auto& l : eigenvalues_numerical(assemble_symbol(rho, v, f, xi))) {
      mi = std::max(mi, std::abs(l.imag()));
    }
    if (threw && mi > 1e-6) ++flagged;
  }
  const bool pass = eig_err <= 1e-10 && imag <= 1e-10 && sym <= 1e-12 && flagged == negatives;
  return {pass, fmt::format("1000 points: eig err {:.2e}, imag {:.2e}, A0Aj asym {:.2e}; "
                            "f*rho<0 flagged {}/{}",
                            eig_err, imag, sym, flagged, negatives)};
}

// --- 3. reduction oracle ------------------------------------------------------------------

Outcome reduction_oracle() {
  const PressureLaw law = make_pressure_law("biofilm", std::vector<double>{0.5});
  const OraclePair pair = run_oracle_pair(benchmark_state(), law, benchmark_controls());
  const auto& c = pair.comparison;
  return {c.max() <= 1e-6, fmt::format("v {:.2e}, rho~ {:.2e}, P vs Q-phi {:.2e}", c.v_distance,
                                       c.rho_distance, c.pressure_distance)};
}

// --- 4. penalty bound ----------------------------------------------------------------------

Outcome penalty_bound() {
  const StudyReport& s = sweep(SchemeKind::ContinuousProjection);
  std::vector<double> maxima;
  for (std::size_t i = 0; i < s.runs.size(); ++i) {
    maxima.push_back(penalty_bound_check(s.runs[i], s.eps_values[i]).max_penalty);
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < maxima.size(); ++i) decreasing = decreasing && maxima[i] < maxima[i - 1];
  const double spread = spread_factor(s.constraint_constants);
  bool ok = std::all_of(s.runs.begin(), s.runs.end(), [](const RunReport& r) { return r.succeeded(); });
  std::string cs;
  for (double c : s.constraint_constants) cs += fmt::format(" {:.3f}", c);
  return {ok && spread <= 2.0 && decreasing,
          fmt::format("constants (empirical){}; spread {:.3f}; max penalty {}", cs, spread,
                      decreasing ? "decreasing" : "NOT decreasing")};
}

// --- 5. divergence scaling --------------------------------------------------------------------

Outcome divergence_scaling() {
  const StudyReport& s = sweep(SchemeKind::ArtificialCompressibility);
  const double spread = spread_factor(s.constraint_constants);
  bool ok = std::all_of(s.runs.begin(), s.runs.end(), [](const RunReport& r) { return r.succeeded(); });
  std::string cs;
  for (double c : s.constraint_constants) cs += fmt::format(" {:.3f}", c);
  return {ok && spread <= 2.0, fmt::format("C (empirical){}; spread {:.3f}", cs, spread)};
}

// --- 6. cross-scheme convergence ----------------------------------------------------------------

Outcome cross_scheme() {
  std::string detail;
  bool pass = true;
  for (SchemeKind k : {SchemeKind::ContinuousProjection, SchemeKind::ArtificialCompressibility}) {
    const StudyReport& s = sweep(k);
    const bool at_t = std::abs(s.distance.compare_time - kT) <= 1e-12 && !s.distance.truncated;
    pass = pass && s.distance.nonincreasing && at_t;
    detail += fmt::format("{}{}:", detail.empty() ? "" : "; ", to_string(k));
    for (double d : s.distance.distances) detail += fmt::format(" {:.3e}", d);
    detail += fmt::format(" (rate {:.2f})", s.rate);
  }
  return {pass, detail};
}

// --- 7. uniqueness / Gronwall ---------------------------------------------------------------------

Outcome uniqueness() {
  SchemeConfig scheme;
  scheme.kind = SchemeKind::MollifiedProjected;
  const SeparationResult r =
      uniqueness_separation(benchmark_state(), scheme, make_pressure_law("kinetic"),
                            benchmark_controls(), DensityPerturbation{1e-6, 1, 0});
  const double span = std::abs(r.slope) * r.times.back();
  const bool linear = r.rms_residual <= 0.1 * span;
  return {linear && r.bound_holds,
          fmt::format("slope {:.4f}, residual {:.2e} (limit {:.2e}), early rate {:.4f}, bound "
                      "excess {:.3f}",
                      r.slope, r.rms_residual, 0.1 * span, r.early_rate, r.bound_excess)};
}

// --- 8. energy shape ---------------------------------------------------------------------------------

Outcome energy() {
  std::vector<const RunReport*> runs;
  for (SchemeKind k : {SchemeKind::ContinuousProjection, SchemeKind::ArtificialCompressibility}) {
    const StudyReport& s = sweep(k);
    for (const auto& r : s.runs) runs.push_back(&r);
    runs.push_back(&s.reference);
  }
  std::size_t checked = 0, good = 0;
  double worst_excess = 0.0, min_c = std::numeric_limits<double>::infinity(), min_rho = 1e300;
  for (const RunReport* r : runs) {
    if (!r->succeeded()) continue;
    const EnergyShape e = energy_shape(*r);
    ++checked;
    if (e.ok()) ++good;
    worst_excess = std::max(worst_excess, e.excess);
    min_c = std::min(min_c, e.c_hat);
    min_rho = std::min(min_rho, e.min_rho);
  }
  return {checked > 0 && good == checked,
          fmt::format("{}/{} runs ok; min c_hat {:.4f}, max excess {:.4f} (limit log 2), min rho "
                      "{:.4f}",
                      good, checked, min_c, worst_excess, min_rho)};
}

// --- 9. temporal self-convergence -----------------------------------------------------------------------

Outcome temporal_order() {
  SchemeConfig scheme;
  scheme.kind = SchemeKind::MollifiedProjected;
  const PressureLaw law = make_pressure_law("kinetic");
  std::vector<State> finals;
  for (int steps : {32, 64, 128}) {
    TimeControls tc = benchmark_controls();
    tc.dt_override = kT / steps;
    finals.push_back(*run_simulation(benchmark_state(), scheme, law, tc).final_state);
  }
  const double e1 = state_distance(finals[0], finals[1]);
  const double e2 = state_distance(finals[1], finals[2]);
  const double order = std::log2(e1 / e2);
  return {order >= 3.5, fmt::format("|u(dt)-u(dt/2)| {:.3e}, |u(dt/2)-u(dt/4)| {:.3e}, order {:.3f}",
                                    e1, e2, order)};
}

// --- 10. determinism and round trips ------------------------------------------------------------------------

Outcome determinism() {
  SchemeConfig scheme;
  scheme.kind = SchemeKind::ArtificialCompressibility;
  scheme.eps = 0.05;
  TimeControls tc = benchmark_controls();
  tc.t_final = 0.1;
  const PressureLaw law = make_pressure_law("kinetic");
  const RunReport a = run_simulation(benchmark_state(), scheme, law, tc);
  const RunReport b = run_simulation(benchmark_state(), scheme, law, tc);
  const bool same_csv = diagnostics_csv(a) == diagnostics_csv(b);
  const bool same_state = a.final_state->rho_tilde.values() == b.final_state->rho_tilde.values() &&
                          a.final_state->v[0].values() == b.final_state->v[0].values() &&
                          a.final_state->v[1].values() == b.final_state->v[1].values() &&
                          a.final_state->p_tilde->values() == b.final_state->p_tilde->values();

  const auto dir = std::filesystem::temp_directory_path() / "cif_acceptance";
  std::filesystem::create_directories(dir);
  write_field_dump(*a.final_state, a.final_time(), dir / "state.cifd");
  const FieldDump d = read_field_dump(dir / "state.cifd");
  const bool dump_exact = d.time == a.final_time() && d.state.rho_bar == a.final_state->rho_bar &&
                          d.state.rho_tilde.values() == a.final_state->rho_tilde.values() &&
                          d.state.p_tilde->values() == a.final_state->p_tilde->values() &&
                          d.state.v[0].values() == a.final_state->v[0].values() &&
                          d.state.v[1].values() == a.final_state->v[1].values();
  write_diagnostics_csv(a, dir / "diag.csv");
  const RunReport back = read_diagnostics_csv(dir / "diag.csv");
  const bool csv_exact = back.times == a.times && back.hs_norm == a.hs_norm &&
                         back.kinetic == a.kinetic && back.div_norm == a.div_norm &&
                         back.penalty_norm == a.penalty_norm && back.min_rho == a.min_rho;
  std::filesystem::remove_all(dir);
  return {same_csv && same_state && dump_exact && csv_exact,
          fmt::format("repeat csv {}, repeat state {}, dump round trip {}, csv round trip {}",
                      same_csv ? "identical" : "DIFFERS", same_state ? "identical" : "DIFFERS",
                      dump_exact ? "exact" : "INEXACT", csv_exact ? "exact" : "INEXACT")};
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_level(spdlog::level::err);
  const std::vector<Criterion> criteria = {
      {1, "projector algebra", 5, projector_algebra},
      {2, "symbol suite", 5, symbol_suite},
      {3, "reduction oracle", 120, reduction_oracle},
      {4, "penalty bound", 300, penalty_bound},
      {5, "divergence scaling", 300, divergence_scaling},
      {6, "cross-scheme convergence", 300, cross_scheme},
      {7, "uniqueness / Gronwall", 120, uniqueness},
      {8, "energy shape", 300, energy},
      {9, "temporal self-convergence", 120, temporal_order},
      {10, "determinism and round trips", 10, determinism},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    fmt::print("[{}] {:>2} {}: {} ({:.2f} s / {:.0f} s{})\n", pass ? "PASS" : "FAIL", c.id, c.name,
               o.detail, secs, c.budget_s, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
