#include <benchmark/benchmark.h>

#include "okounkov/invariants.hpp"
#include "okounkov/polytope.hpp"
#include "okounkov/surface.hpp"

using namespace okounkov;

namespace {

// Grid points of a cube, most of them interior; stresses the double description.
void BM_HullCubeGrid(benchmark::State& state) {
  const long k = state.range(0);
  std::vector<RatVec> pts;
  for (long x = 0; x <= k; ++x)
    for (long y = 0; y <= k; ++y)
      for (long z = 0; z <= k; ++z) pts.push_back({Rat(x) / k, Rat(y) / k, Rat(z) / k});
  for (auto _ : state) benchmark::DoNotOptimize(hull(pts, 3));
}
BENCHMARK(BM_HullCubeGrid)->Arg(2)->Arg(4)->Arg(6);

void BM_ZariskiAnticanonicalShift(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  auto model = SurfaceModel::delpezzo(s);
  PicClass d = Rat(3) * PicClass::hyperplane(s);
  for (std::size_t i = 0; i < s; ++i) d.m[i] = i < 2 ? Rat(-1) : Rat(1);  // -K + E_1 + E_2
  for (auto _ : state) benchmark::DoNotOptimize(zariski(model, d));
}
BENCHMARK(BM_ZariskiAnticanonicalShift)->DenseRange(2, 8, 2);

void BM_NakayamaHyperplane(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  auto model = SurfaceModel::delpezzo(s);
  for (auto _ : state) benchmark::DoNotOptimize(nakayama_mu(model, PicClass::hyperplane(s)));
}
BENCHMARK(BM_NakayamaHyperplane)->DenseRange(2, 8, 2);

void BM_SurfaceBodyTwoPoints(benchmark::State& state) {
  auto model = SurfaceModel::delpezzo(2);
  const Rat step = Rat(1) / state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(surface_body_outer(model, PicClass::hyperplane(2), {0, 1}, step, Rat(1)));
}
BENCHMARK(BM_SurfaceBodyTwoPoints)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
