#include <benchmark/benchmark.h>

#include "rauzy/fractal.hpp"
#include "rauzy/kernels.hpp"

using namespace rauzy;

namespace {

const PisotContext& hokkaido() {
  static const PisotContext ctx = PisotContext::build(families::sigma(0));
  return ctx;
}

const std::vector<Polygon>& patch() {
  static const std::vector<Polygon> polys = rauzy_approx(hokkaido(), WedgeType::parse("2^3"), 22).corners();
  return polys;
}

// Brute-force serial Hausdorff is quadratic; a coarse grid keeps it to seconds.
const std::vector<Vec2>& samples(int level) {
  static std::vector<Vec2> pts[2];
  auto& p = pts[level == 9];
  if (p.empty()) p = sample_polygons(rauzy_approx(hokkaido(), WedgeType::parse("2^3"), level).corners(), 0.02);
  return p;
}

void BM_overlap_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(overlap_audit_serial(patch(), 1e-9).total);
}
void BM_overlap_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(overlap_audit(patch(), 1e-9).total);
}
void BM_hausdorff_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(hausdorff_serial(samples(8), samples(9)));
}
void BM_hausdorff_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(hausdorff(samples(8), samples(9)));
}
void BM_apply_serial(benchmark::State& st) {
  const Chain c = apply_map_power(hokkaido().top, parse_seed("1^3+1^4+2^4+2^5+3^5", 5), 20);
  for (auto _ : st) benchmark::DoNotOptimize(apply_map_serial(hokkaido().top, c).size());
}
void BM_apply_parallel(benchmark::State& st) {
  const Chain c = apply_map_power(hokkaido().top, parse_seed("1^3+1^4+2^4+2^5+3^5", 5), 20);
  for (auto _ : st) benchmark::DoNotOptimize(apply_map(hokkaido().top, c).size());
}

}  // namespace

BENCHMARK(BM_overlap_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_overlap_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hausdorff_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hausdorff_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
