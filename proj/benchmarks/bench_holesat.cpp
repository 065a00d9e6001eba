#include <benchmark/benchmark.h>

#include "holesat/encoder.hpp"
#include "holesat/geometry.hpp"
#include "holesat/minisolver.hpp"
#include "holesat/partition.hpp"
#include "holesat/signotope.hpp"

using namespace holesat;

static void BM_Encode(benchmark::State &st) {
  const auto v = static_cast<Variant>(st.range(1));
  EncodingConfig cfg{static_cast<int>(st.range(0)), {Target::hole(6)}, v};
  std::size_t clauses = 0;
  for (auto _ : st) {
    auto f = encode(cfg);
    clauses = f.size();
    benchmark::DoNotOptimize(f);
  }
  st.counters["clauses"] = static_cast<double>(clauses);
  st.SetLabel(to_string(v));
}
BENCHMARK(BM_Encode)
    ->ArgsProduct({{20, 30}, {0, 1, 2, 3, 4}})
    ->Unit(benchmark::kMillisecond);

static void BM_GenerateCubes(benchmark::State &st) {
  const int len = static_cast<int>(st.range(0));
  std::size_t count = 0;
  for (auto _ : st) {
    auto cs = generate_cubes(30, len);
    count = cs.cubes.size();
    benchmark::DoNotOptimize(cs);
  }
  st.counters["cubes"] = static_cast<double>(count);
}
BENCHMARK(BM_GenerateCubes)->DenseRange(9, 17, 4)->Unit(benchmark::kMillisecond);

static void BM_SolveGon(benchmark::State &st) {
  const int n = static_cast<int>(st.range(0));
  auto f = encode({n, {Target::gon(5)}, Variant::O4});
  for (auto _ : st)
    benchmark::DoNotOptimize(solve(f));
}
BENCHMARK(BM_SolveGon)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_SolveHole6(benchmark::State &st) {
  const int n = static_cast<int>(st.range(0));
  auto f = encode({n, {Target::hole(6)}, Variant::O4});
  for (auto _ : st)
    benchmark::DoNotOptimize(solve(f));
}
BENCHMARK(BM_SolveHole6)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_OvermarsHoles(benchmark::State &st) {
  PointSet s = read_points(HOLESAT_DATA_DIR "/overmars29.txt");
  const int k = static_cast<int>(st.range(0));
  for (auto _ : st)
    benchmark::DoNotOptimize(enumerate_holes(s, k));
}
BENCHMARK(BM_OvermarsHoles)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_OvermarsGons(benchmark::State &st) {
  PointSet s = read_points(HOLESAT_DATA_DIR "/overmars29.txt");
  for (auto _ : st)
    benchmark::DoNotOptimize(enumerate_gons(s, 7));
}
BENCHMARK(BM_OvermarsGons)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSignotopes(benchmark::State &st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) {
    std::size_t c = 0;
    enumerate(n, [&](const OrientationAssignment &) { return ++c, true; },
              EnumerateOptions{8, true});
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_EnumerateSignotopes)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
