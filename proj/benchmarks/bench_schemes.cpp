#include <benchmark/benchmark.h>

#include "cif/integrate.hpp"
#include "cif/setup.hpp"

namespace {

const cif::PressureLaw& kinetic() {
  static const cif::PressureLaw law = cif::make_pressure_law("kinetic");
  return law;
}

void BM_AdvectiveRhs(benchmark::State& state) {
  const cif::Grid g(static_cast<std::size_t>(state.range(0)));
  const cif::State s = cif::taylor_green_state(g, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(cif::advective_rhs(s, kinetic()));
}
BENCHMARK(BM_AdvectiveRhs)->Arg(64)->Arg(128);

// One right-hand side evaluation per scheme; range(1) selects a, b, c.
void BM_SchemeRhs(benchmark::State& state) {
  const cif::Grid g(static_cast<std::size_t>(state.range(0)));
  cif::SchemeConfig sc;
  sc.kind = static_cast<cif::SchemeKind>(state.range(1));
  sc.eps = 0.05;
  const cif::State s = cif::prepare_initial_state(cif::taylor_green_state(g, 0.1), sc);
  for (auto _ : state) benchmark::DoNotOptimize(cif::evaluate_scheme(sc, s, kinetic()));
}
BENCHMARK(BM_SchemeRhs)->ArgsProduct({{64}, {0, 1, 2}});

void BM_SplitStep(benchmark::State& state) {
  const cif::Grid g(64);
  cif::SchemeConfig sc;
  sc.kind = static_cast<cif::SchemeKind>(state.range(0));
  sc.eps = 0.05;
  const cif::State s = cif::prepare_initial_state(cif::taylor_green_state(g, 0.1), sc);
  const cif::RhsFn rhs = [&](const cif::State& x) {
    return cif::evaluate_scheme(sc, x, kinetic()).nonstiff;
  };
  const cif::StiffOperator op = cif::stiff_operator(sc);
  const double dt = cif::cfl_dt(s, kinetic(), cif::TimeControls{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(cif::split_step(s, rhs, op, dt, cif::Splitting::Strang));
  }
}
BENCHMARK(BM_SplitStep)->Arg(0)->Arg(1)->Arg(2);

}  // namespace
