#include <benchmark/benchmark.h>
static void BM_placeholder(benchmark::State& state) { for (auto _ : state) {} }
BENCHMARK(BM_placeholder);
int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
