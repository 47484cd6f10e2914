#include <benchmark/benchmark.h>

#include "dp3/chow.hpp"
#include "dp3/geography.hpp"
#include "dp3/newton.hpp"
#include "dp3/scroll.hpp"

namespace {

void bm_sections_small(benchmark::State& state) {
  dp3::WeightMatrix mat = dp3::weight_matrix(dp3::StandardScroll{1, {0, 1, 2, 2}});
  for (auto _ : state) {
    auto s = dp3::sections(mat, dp3::DivClass{3, -2});
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_sections_small);

void bm_sections_large(benchmark::State& state) {
  dp3::WeightMatrix mat = dp3::weight_matrix(dp3::StandardScroll{2, {0, 1, 2, 3, 4}});
  for (auto _ : state) {
    auto s = dp3::sections(mat, dp3::DivClass{4, 2});
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_sections_large);

void bm_chamber_decomposition(benchmark::State& state) {
  dp3::WeightMatrix mat = dp3::weight_matrix(dp3::StandardScroll{1, {0, 1, 1, 2}});
  mat = dp3::extend(mat, dp3::DivClass{3, -3}, "xi");
  mat = dp3::extend(mat, dp3::DivClass{5, -6}, "eta");
  for (auto _ : state) {
    auto dec = dp3::chamber_decomposition(mat);
    benchmark::DoNotOptimize(dec);
  }
}
BENCHMARK(bm_chamber_decomposition);

void bm_chow_reduce(benchmark::State& state) {
  dp3::ScrollRing ring(dp3::StandardScroll{1, {0, 3, 5, 6}});
  dp3::ChowExpr expr = dp3::ChowExpr::parse("(M-2L)^2(3M-4L)(M+L)");
  for (auto _ : state) {
    auto r = ring.reduce(expr);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_chow_reduce);

void bm_geography_window(benchmark::State& state) {
  for (auto _ : state) {
    auto pts = dp3::enumerate_geography();
    benchmark::DoNotOptimize(pts);
  }
}
BENCHMARK(bm_geography_window);

void bm_newton_table(benchmark::State& state) {
  for (auto _ : state) {
    auto t = dp3::newton_table(dp3::FamilyParams{-4, 2, 2, 4});
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(bm_newton_table);

}  // namespace

BENCHMARK_MAIN();
