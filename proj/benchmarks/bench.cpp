#include <benchmark/benchmark.h>

#include "vassiliev/brauer.hpp"
#include "vassiliev/dimension.hpp"
#include "vassiliev/families.hpp"
#include "vassiliev/weight.hpp"

using namespace vassiliev;

static void BM_WheelEval(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Diagram w = omega(k);
  for (auto _ : state) {
    Poly gl = evaluate(w, WeightFlavor::gl);
    Poly so = evaluate(w, WeightFlavor::so);
    benchmark::DoNotOptimize(gl);
    benchmark::DoNotOptimize(so);
  }
}
BENCHMARK(BM_WheelEval)->Arg(3)->Arg(5)->Arg(7);

static void BM_TPowerEval(benchmark::State& state) {
  Diagram d = t_power(omega(2), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Poly so = evaluate(d, WeightFlavor::so);
    benchmark::DoNotOptimize(so);
  }
}
BENCHMARK(BM_TPowerEval)->Arg(2)->Arg(4);

static void BM_BrauerPowerTrace(benchmark::State& state) {
  auto el = named_elements(3);
  BrElement so_el = el.at("u+") - el.at("u-") + el.at("x+") - el.at("x-");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Poly t = so_el.pow(k).trace();
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_BrauerPowerTrace)->Arg(4)->Arg(6)->Arg(8);

static void BM_Dims(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    DimReport r = dims(n, 1);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Dims)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
