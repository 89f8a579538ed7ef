#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "cif/diagnostics.hpp"
#include "cif/errors.hpp"
#include "cif/setup.hpp"
#include "cif/study.hpp"
#include "test_support.hpp"

using namespace cif;
using doctest::Approx;

namespace {

const Grid g(16);

RunReport manual_report(SchemeKind kind, std::vector<double> times, const State& s) {
  RunReport r;
  r.scheme = kind;
  for (double t : times) {
    r.record(measure(s, t));
    r.snapshots.push_back(s);
  }
  r.final_state = s;
  return r;
}

}  // namespace

TEST_SUITE("constraint constants") {
  TEST_CASE("penalty bound preconditions") {
    RunReport a;
    a.penalty_norm = {0.1};
    CHECK_THROWS_AS(penalty_bound_check(a, 0.1), PreconditionError);
    RunReport b;
    b.scheme = SchemeKind::ContinuousProjection;
    CHECK_THROWS_AS(penalty_bound_check(b, 0.1), PreconditionError);
    b.penalty_norm = {0.0, 0.0};
    CHECK(penalty_bound_check(b, 0.1).constant == 0.0);
    CHECK_THROWS_AS(penalty_bound_check(b, 0.0), PreconditionError);
    b.penalty_norm = {0.01, 0.03, 0.02};
    CHECK(penalty_bound_check(b, 0.1).constant == Approx(0.3));
  }

  TEST_CASE("divergence bound needs scheme c") {
    RunReport r;
    r.scheme = SchemeKind::ArtificialCompressibility;
    r.div_norm = {0.0, 0.02};
    CHECK(divergence_bound_check(r, 0.01).constant == Approx(2.0));
    r.scheme = SchemeKind::ContinuousProjection;
    CHECK_THROWS_AS(divergence_bound_check(r, 0.01), PreconditionError);
  }

  TEST_CASE("spread factor") {
    const std::vector<double> v{1.0, 1.5, 1.2};
    CHECK(spread_factor(v) == Approx(1.5));
    const std::vector<double> z{0.0, 1.0};
    CHECK(spread_factor(z) == std::numeric_limits<double>::infinity());
  }
}

TEST_SUITE("distances") {
  TEST_CASE("a run has zero distance to itself") {
    const RunReport r = manual_report(SchemeKind::MollifiedProjected, {0.0, 0.5},
                                      taylor_green_state(g, 0.1));
    const std::vector<RunReport> runs{r};
    const DistanceResult d = scheme_distance(runs, r);
    CHECK(d.distances == std::vector<double>{0.0});
    CHECK_FALSE(d.truncated);
    CHECK(d.compare_time == 0.5);
  }

  TEST_CASE("a shorter run truncates the comparison") {
    const State s = taylor_green_state(g, 0.1);
    State shifted = s;
    shifted.rho_tilde += ScalarField(g, 0.01);
    const RunReport ref = manual_report(SchemeKind::MollifiedProjected, {0.0, 0.25, 0.5}, s);
    const std::vector<RunReport> runs{
        manual_report(SchemeKind::ContinuousProjection, {0.0, 0.25, 0.5}, shifted),
        manual_report(SchemeKind::ContinuousProjection, {0.0, 0.25}, s)};
    const DistanceResult d = scheme_distance(runs, ref);
    CHECK(d.truncated);
    CHECK(d.compare_time == 0.25);
    CHECK(d.distances[0] == Approx(0.01));
    CHECK(d.distances[1] == 0.0);
    CHECK(d.nonincreasing);
  }

  TEST_CASE("different grids are rejected") {
    const RunReport a = manual_report(SchemeKind::MollifiedProjected, {0.0}, taylor_green_state(g, 0.1));
    const std::vector<RunReport> b{
        manual_report(SchemeKind::MollifiedProjected, {0.0}, taylor_green_state(Grid(8), 0.1))};
    CHECK_THROWS_AS(scheme_distance(b, a), DimensionMismatch);
  }

  TEST_CASE("fit rate recovers a power law") {
    const std::vector<double> eps{0.2, 0.1, 0.05};
    const std::vector<double> d{0.4 * 0.04, 0.4 * 0.01, 0.4 * 0.0025};
    CHECK(fit_rate(eps, d) == Approx(2.0));
  }
}

TEST_SUITE("oracle comparison") {
  TEST_CASE("fluid at rest agrees trivially") {
    const PressureLaw law = make_pressure_law("biofilm");
    const State rest{ScalarField(g), VectorField(g), std::nullopt, 1.0};
    TimeControls c;
    c.t_final = 0.1;
    const OraclePair p = run_oracle_pair(rest, law, c);
    CHECK(p.comparison.max() < 1e-14);
  }

  TEST_CASE("shear flow with a density wave") {
    const Grid grid(32);
    const PressureLaw law = make_pressure_law("biofilm");
    TimeControls c;
    c.t_final = 0.3;
    const OraclePair p = run_oracle_pair(shear_state(grid, 0.2), law, c);
    CHECK(p.comparison.v_distance <= 1e-6);
    CHECK(p.comparison.rho_distance <= 1e-6);
    CHECK(p.comparison.pressure_distance <= 1e-6);
    // A strong mollifier is visible.
    const OraclePair far = run_oracle_pair(shear_state(grid, 0.2), law, c, 0.5);
    CHECK(far.comparison.max() > 1e-4);
  }

  TEST_CASE("a velocity-dependent law is rejected") {
    const State s = taylor_green_state(g, 0.1);
    const RunReport a = manual_report(SchemeKind::MollifiedProjected, {0.0}, s);
    const RunReport o = manual_report(SchemeKind::ReductionOracle, {0.0}, s);
    CHECK_THROWS_AS(oracle_compare(a, o, make_pressure_law("kinetic")), PreconditionError);
    CHECK_THROWS_AS(oracle_compare(o, a, make_pressure_law("biofilm")), PreconditionError);
  }
}

TEST_SUITE("hyperbolicity") {
  TEST_CASE("uniform state") {
    const State s{ScalarField(g), VectorField(g), std::nullopt, 1.0};
    const std::vector<State> traj{s};
    const auto r = hyperbolicity_scan(traj, make_pressure_law("constant"), 100);
    CHECK(r.hyperbolic);
    CHECK(r.min_f_over_rho == Approx(1.0));
    CHECK(r.max_imag <= 1e-10);
    CHECK(r.min_middle_multiplicity == 1);
    CHECK(r.max_middle_multiplicity == 1);
  }

  TEST_CASE("f = 1 - rho fails where the density exceeds one") {
    const PressureLaw law = make_pressure_law("affine_rho", std::vector<double>{1.0, -1.0});
    const State s{ScalarField::from_function(g, [](double x, double) { return 0.5 * std::sin(x); }),
                  VectorField(g), std::nullopt, 1.0};
    const std::vector<State> traj{s};
    const auto r = hyperbolicity_scan(traj, law, 50);
    CHECK_FALSE(r.hyperbolic);
    CHECK(r.min_f == Approx(-0.5));
    CHECK(r.worst_x == Approx(std::numbers::pi / 2));
  }

  TEST_CASE("kinetic law along a Taylor-Green run") {
    TimeControls c;
    c.t_final = 0.2;
    c.keep_snapshots = true;
    const PressureLaw law = make_pressure_law("kinetic");
    const RunReport r = run_simulation(taylor_green_state(g, 0.1), SchemeConfig{}, law, c);
    const auto h = hyperbolicity_scan(r.snapshots, law, 200);
    CHECK(h.hyperbolic);
    CHECK(h.min_f >= 1.0);
    CHECK(h.samples >= 200 * r.snapshots.size());
  }
}

TEST_SUITE("uniqueness") {
  const PressureLaw law = make_pressure_law("kinetic");

  TEST_CASE("identical twins do not separate") {
    TimeControls c;
    c.t_final = 0.1;
    DensityPerturbation p;
    p.delta = 0.0;
    const auto r = uniqueness_separation(taylor_green_state(g, 0.1), SchemeConfig{}, law, c, p);
    for (double w : r.weighted_separation) CHECK(w == 0.0);
    CHECK(r.log_growth.empty());
  }

  TEST_CASE("constant base: the perturbation is only transported") {
    TimeControls c;
    c.t_final = 0.2;
    const State base{ScalarField(g), VectorField(g), std::nullopt, 1.0};
    const auto r = uniqueness_separation(base, SchemeConfig{}, make_pressure_law("constant"), c,
                                         DensityPerturbation{});
    REQUIRE_FALSE(r.weighted_separation.empty());
    const double w0 = r.weighted_separation.front();
    CHECK(w0 > 0.0);
    // At rest with f = 1 the weighted energy is conserved to O(delta).
    for (double w : r.weighted_separation) CHECK(std::abs(w - w0) <= 1e-5 * w0);
    CHECK(r.bound_holds);
  }

  TEST_CASE("weighted separation weights the density block by f / rho") {
    const State a{ScalarField(g), VectorField(g), std::nullopt, 1.0};
    State b = a;
    b.rho_tilde = ScalarField(g, 0.1);
    const PressureLaw four = make_pressure_law("constant", std::vector<double>{4.0});
    CHECK(weighted_separation(a, b, four) == Approx(4.0 / 1.1 * 0.01));
  }
}

TEST_SUITE("energy shape") {
  std::vector<double> grid_times(double t_end, std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = t_end * static_cast<double>(i) / (n - 1);
    return t;
  }

  TEST_CASE("exponential growth is within the bound") {
    const auto t = grid_times(0.5, 101);
    std::vector<double> hs, rho(t.size(), 1.0);
    for (double x : t) hs.push_back(2.0 * std::exp(0.8 * x));
    const EnergyShape e = energy_shape(t, hs, rho);
    CHECK(e.c_hat == Approx(0.8));
    CHECK(e.ok());
  }

  TEST_CASE("a finite-time blow-up history is flagged") {
    const auto t = grid_times(0.54, 201);
    std::vector<double> hs, rho(t.size(), 1.0);
    for (double x : t) hs.push_back(1.0 / (0.55 - x));
    const EnergyShape e = energy_shape(t, hs, rho);
    CHECK(e.super_exponential());
    CHECK_FALSE(e.ok());
  }

  TEST_CASE("decay gives a negative rate") {
    const auto t = grid_times(0.5, 11);
    std::vector<double> hs, rho(t.size(), 1.0);
    for (double x : t) hs.push_back(std::exp(-x));
    CHECK_FALSE(energy_shape(t, hs, rho).nonnegative_rate());
  }

  TEST_CASE("vacuum and short histories") {
    const auto t = grid_times(0.5, 11);
    std::vector<double> hs(t.size(), 1.0), rho(t.size(), 1.0);
    rho[4] = 0.0;
    CHECK_FALSE(energy_shape(t, hs, rho).ok());
    const std::vector<double> two{0.0, 1.0};
    CHECK_THROWS_AS(energy_shape(two, two, two), PreconditionError);
  }

  TEST_CASE("exponential fit") {
    const auto t = grid_times(1.0, 21);
    std::vector<double> hs;
    for (double x : t) hs.push_back(3.0 * std::exp(1.5 * x + 0.5 * x * x));
    const GrowthFit f = fit_exponential_growth(t, hs);
    CHECK(f.linear == Approx(1.5).epsilon(1e-8));
    CHECK(f.quadratic == Approx(0.5).epsilon(1e-8));
    CHECK(f.max_excess > 0.0);
  }
}
