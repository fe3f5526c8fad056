// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the transform-heavy paths. Inputs reuse one state per
// fixture so timings isolate the kernels themselves.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "fresneltomo/fockspace.hpp"
#include "fresneltomo/grid.hpp"
#include "fresneltomo/gridtransform.hpp"
#include "fresneltomo/phasespace.hpp"
#include "fresneltomo/states.hpp"
#include "fresneltomo/symplectic.hpp"

namespace ft = fresneltomo;

namespace {
constexpr double kPi = 3.14159265358979323846;

ft::GridWavefunction bench_state(int samples) {
  return ft::make_state_grid(ft::parse_state_spec("coherent:1"),
                             ft::GridSpec{10.0, samples});
}

void BM_FresnelTransform(benchmark::State& state) {
  const ft::GridWavefunction psi = bench_state(static_cast<int>(state.range(0)));
  const ft::RayMatrix m{1.3, 0.8, -0.4, 0.52307692307692299};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ft::fresnel_transform(m, psi));
  }
}
BENCHMARK(BM_FresnelTransform)->Arg(512)->Arg(1024)->Arg(2048);

void BM_FresnelTransformSmallB(benchmark::State& state) {
  // Small b forces the deepest kernel refinement the sample cap allows.
  const ft::GridWavefunction psi = bench_state(1024);
  const ft::RayMatrix m{1.0, 0.01, -1.0, 0.99};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ft::fresnel_transform(m, psi));
  }
}
BENCHMARK(BM_FresnelTransformSmallB);

void BM_MomentumWavefunction(benchmark::State& state) {
  const ft::GridWavefunction psi = bench_state(1024);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ft::momentum_wavefunction(psi));
  }
}
BENCHMARK(BM_MomentumWavefunction);

void BM_Wigner(benchmark::State& state) {
  const ft::GridWavefunction psi = bench_state(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ft::wigner(psi));
  }
}
BENCHMARK(BM_Wigner)->Arg(256)->Arg(512)->Arg(1024);

void BM_RadonProjection(benchmark::State& state) {
  const ft::WignerGrid w = ft::wigner(bench_state(1024));
  const ft::RayMatrix m{1.3, 0.8, -0.4, 0.52307692307692299};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ft::radon_position(w, m));
  }
}
BENCHMARK(BM_RadonProjection);

void BM_FresnelOperator(benchmark::State& state) {
  const ft::SRPair p = ft::abcd_to_sr(ft::RayMatrix{1.1, 0.4, -0.3, 0.8});
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ft::fresnel_operator(p, dim));
  }
}
BENCHMARK(BM_FresnelOperator)->Arg(64)->Arg(256);

void BM_FilteredBackProjection(benchmark::State& state) {
  const ft::GridWavefunction psi = bench_state(512);
  std::vector<ft::TomogramCurve> curves;
  const int angles = 60;
  curves.reserve(angles);
  for (int i = 0; i < angles; ++i) {
    curves.push_back(ft::tomogram_via_fresnel(
        psi, ft::rotation(kPi * i / angles), ft::TomogramMode::position));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ft::inverse_radon_fbp(curves));
  }
}
BENCHMARK(BM_FilteredBackProjection);
}  // namespace

BENCHMARK_MAIN();
