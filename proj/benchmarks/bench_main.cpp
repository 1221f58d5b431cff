#include <benchmark/benchmark.h>

#include "hypersurf/certify.hpp"
#include "hypersurf/genfam.hpp"
#include "hypersurf/invariants.hpp"

using namespace hypersurf;

namespace {

void bm_resolution_sweep(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Int acc = 0;
    for (int m = 2; m <= bound; ++m)
      for (int q = 1; q < m; ++q) {
        if (int_gcd(q, m) != 1) continue;
        acc += resolution_data(SingularityType(m, q)).length();
      }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(bm_resolution_sweep)->Arg(50)->Arg(200);

void bm_build_fiber_tower(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Tower t = build_tower(builtin::fiber_tower(m, n));
    benchmark::DoNotOptimize(t.nodes.size());
  }
}
BENCHMARK(bm_build_fiber_tower)->Args({3, 3})->Args({5, 5});

void bm_verdict(benchmark::State& state) {
  TowerSpec spec = builtin::fiber_tower(3, 3);
  for (auto _ : state) {
    Verdict v = verdict(build_tower(spec));
    benchmark::DoNotOptimize(v.kind);
  }
}
BENCHMARK(bm_verdict);

void bm_trace_conic(benchmark::State& state) {
  Tower t = build_tower(builtin::tangent_lines_tower(15, 3));
  for (auto _ : state) {
    TracedCurve tc = trace_curve(t, CurveGeom::conic());
    benchmark::DoNotOptimize(tc.genus);
  }
}
BENCHMARK(bm_trace_conic);

void bm_instantiate_and_validate(benchmark::State& state) {
  std::vector<Int> degrees(8, Int(2));
  for (auto _ : state) {
    EquationSet es = instantiate_family(FamilyKind::FamA, degrees);
    ValidationReport rep = validate_family(es);
    benchmark::DoNotOptimize(rep.ok);
  }
}
BENCHMARK(bm_instantiate_and_validate);

void bm_cuboid_report(benchmark::State& state) {
  for (auto _ : state) {
    CuboidReport rep = cuboid_report();
    benchmark::DoNotOptimize(rep.inventory_total);
  }
}
BENCHMARK(bm_cuboid_report);

}  // namespace

BENCHMARK_MAIN();
