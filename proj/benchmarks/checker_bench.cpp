#include <benchmark/benchmark.h>

#include "ltlwb/checker.hpp"
#include "ltlwb/formula.hpp"
#include "ltlwb/reductions.hpp"

namespace {

using namespace ltlwb;

Formula nested_until(int n) {
  Formula f = Formula::prop("p0");
  for (int i = 1; i < n; ++i) f = Formula::until(Formula::prop("p" + std::to_string(i)), f);
  return f;
}

void BM_SatNestedUntil(benchmark::State& state) {
  Formula f = Formula::conj(nested_until(static_cast<int>(state.range(0))), Formula::globally(Formula::finally(Formula::prop("p0"))));
  for (auto _ : state) benchmark::DoNotOptimize(sat(f));
}
BENCHMARK(BM_SatNestedUntil)->DenseRange(2, 8, 2);

void BM_McSquareTilingX(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  SquareTilingInstance t{{"a", "b"}, {{0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}}, k};
  ReductionOutput out = reduce_sqtiling_to_mc_x(t);
  for (auto _ : state) benchmark::DoNotOptimize(mc_universal(*out.mc));
}
BENCHMARK(BM_McSquareTilingX)->DenseRange(1, 3);

void BM_McXBoundedSquareTiling(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  SquareTilingInstance t{{"a", "b"}, {{0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}}, k};
  ReductionOutput out = reduce_sqtiling_to_mc_x(t);
  for (auto _ : state) benchmark::DoNotOptimize(mc_x_bounded(*out.mc));
}
BENCHMARK(BM_McXBoundedSquareTiling)->DenseRange(1, 2);

void BM_McRectTilingU(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RectTilingInstance t{{"a", "b"}, {}, 0, 0};
  for (int i = 0; i < n; ++i) t.tiles.push_back({i % 2, (i + 1) % 2, 1, 1});
  ReductionOutput out = reduce_recttiling_to_mc_u(t);
  for (auto _ : state) benchmark::DoNotOptimize(mc_universal(*out.mc));
}
BENCHMARK(BM_McRectTilingU)->DenseRange(1, 3);

void BM_SatX(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<Formula> parts;
  for (int i = 0; i < n; ++i)
    parts.push_back(Formula::disj(next_n(Formula::prop("p"), i), next_n(Formula::neg(Formula::prop("p")), i + 1)));
  Formula f = conj_all(parts);
  for (auto _ : state) benchmark::DoNotOptimize(sat_x(f));
}
BENCHMARK(BM_SatX)->RangeMultiplier(2)->Range(4, 64);

}  // namespace
