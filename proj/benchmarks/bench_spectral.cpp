#include <benchmark/benchmark.h>

#include <cmath>

#include "cif/spectral.hpp"

namespace {

cif::VectorField sample_velocity(const cif::Grid& g) {
  return cif::VectorField::from_function(g, [](double x, double y) -> std::array<double, 2> {
    return {std::sin(x) * std::cos(2 * y) + 0.1 * std::cos(3 * x), std::sin(y + x)};
  });
}

void BM_ForwardInverse(benchmark::State& state) {
  const cif::Grid g(static_cast<std::size_t>(state.range(0)));
  const cif::ScalarField f = sample_velocity(g)[0];
  for (auto _ : state) {
    auto c = cif::transform_forward(f);
    benchmark::DoNotOptimize(cif::transform_inverse(c));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_ForwardInverse)->RangeMultiplier(2)->Range(32, 256);

void BM_Leray(benchmark::State& state) {
  const cif::Grid g(static_cast<std::size_t>(state.range(0)));
  const cif::VectorField v = sample_velocity(g);
  for (auto _ : state) benchmark::DoNotOptimize(cif::leray_project(v));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_Leray)->RangeMultiplier(2)->Range(32, 256);

void BM_Mollify(benchmark::State& state) {
  const cif::Grid g(static_cast<std::size_t>(state.range(0)));
  const cif::VectorField v = sample_velocity(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cif::mollify(v, 0.05, cif::MollifierKind::gaussian()));
  }
}
BENCHMARK(BM_Mollify)->Arg(64)->Arg(128);

void BM_SobolevNorm(benchmark::State& state) {
  const cif::Grid g(static_cast<std::size_t>(state.range(0)));
  const cif::VectorField v = sample_velocity(g);
  for (auto _ : state) benchmark::DoNotOptimize(cif::sobolev_norm(v, 3.0));
}
BENCHMARK(BM_SobolevNorm)->Arg(64)->Arg(128);

}  // namespace
