#include <benchmark/benchmark.h>

#include <vector>

#include "abcircle/canny.hpp"
#include "abcircle/detector.hpp"
#include "abcircle/image.hpp"
#include "abcircle/objective.hpp"
#include "abcircle/raster.hpp"
#include "abcircle/rng.hpp"
#include "abcircle/synth.hpp"

namespace {

using namespace abcircle;

const GroundTruth& desk_truth() {
  static const GroundTruth t{
      {Circle{80, 60, 35}, Circle{240, 70, 40}, Circle{160, 180, 50}}};
  return t;
}

const EdgeMap& desk_scene() {
  static const EdgeMap em = synth_scene(320, 240, desk_truth());
  return em;
}

void BM_RasterizeCircle(benchmark::State& state) {
  const Circle c{160, 120, static_cast<double>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rasterize_circle(c, 320, 240));
  }
}
BENCHMARK(BM_RasterizeCircle)->Arg(10)->Arg(50)->Arg(100);

void BM_MatchError(benchmark::State& state) {
  const EdgeMap& em = desk_scene();
  const Circle c{160, 180, 50};
  for (auto _ : state) {
    benchmark::DoNotOptimize(match_error(c, em));
  }
}
BENCHMARK(BM_MatchError);

void BM_ObjectiveEvaluate(benchmark::State& state) {
  const EdgeMap& em = desk_scene();
  const Objective obj(em, 5.0, default_rmax(em.width, em.height));
  Rng rng(11);
  const double hi = static_cast<double>(em.edge_count() - 1);
  std::vector<std::array<double, 3>> positions(256);
  for (auto& p : positions) {
    p = {rng.uniform(0, hi), rng.uniform(0, hi), rng.uniform(0, hi)};
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(obj.evaluate(positions[i]));
    i = (i + 1) % positions.size();
  }
}
BENCHMARK(BM_ObjectiveEvaluate);

void BM_CannyEdges(benchmark::State& state) {
  GrayImage img{320, 240, std::vector<std::uint8_t>(320 * 240)};
  Rng rng(3);
  for (auto& px : img.data) {
    px = static_cast<std::uint8_t>(rng.index(256));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(canny_edges(img));
  }
}
BENCHMARK(BM_CannyEdges)->Unit(benchmark::kMillisecond);

void BM_DetectCircles(benchmark::State& state) {
  const EdgeMap& em = desk_scene();
  DetectorConfig cfg;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    cfg.abc.seed = seed++;
    benchmark::DoNotOptimize(detect_circles(em, cfg));
  }
}
BENCHMARK(BM_DetectCircles)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
