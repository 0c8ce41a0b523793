// Copyright 2026 The MirrorForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>

#include "mirrorforge/field.hpp"
#include "mirrorforge/fit.hpp"
#include "mirrorforge/mesh.hpp"
#include "mirrorforge/mirror.hpp"
#include "mirrorforge/poisson.hpp"
#include "mirrorforge/sim.hpp"

namespace mf = mirrorforge;

namespace {

const mf::DomainRect kPanorama = mf::DomainRect::panoramic(2 * std::numbers::pi, 30);

const mf::MirrorSurface& Mirror() {
  static const mf::MirrorSurface m =
      mf::MirrorSurface(
          mf::fit_polynomial(mf::PlanarComponents::cylindrical(), kPanorama, mf::PolyBasis(8), mf::Quadrature{})
              .polynomial,
          kPanorama)
          .with_apex_at(0.0);
  return m;
}

void BM_FitPolynomial(benchmark::State& state) {
  const mf::PolyBasis basis(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mf::fit_polynomial(mf::PlanarComponents::cylindrical(), kPanorama, basis, mf::Quadrature{}).objective);
  }
}
BENCHMARK(BM_FitPolynomial)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_FitPoisson(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf::fit_poisson(mf::PlanarComponents::cylindrical(), kPanorama, n, n).objective);
  }
}
BENCHMARK(BM_FitPoisson)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ScoreProjection(benchmark::State& state) {
  const mf::Scene scene = mf::Scene::around(Mirror());
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf::score_projection(Mirror(), scene, 100, 40, 1).azimuth.rms);
  }
}
BENCHMARK(BM_ScoreProjection)->Unit(benchmark::kMillisecond);

void BM_RenderConquistador(benchmark::State& state) {
  const mf::CompositeSurface c = mf::make_conquistador(Mirror());
  const mf::Scene scene = mf::Scene::around(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf::render_panorama(c, scene, 640, 480, 1).misses);
  }
}
BENCHMARK(BM_RenderConquistador)->Unit(benchmark::kMillisecond);

void BM_Tessellate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf::tessellate(Mirror(), 64, 32).faces.size());
  }
}
BENCHMARK(BM_Tessellate)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
