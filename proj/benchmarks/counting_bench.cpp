#include <benchmark/benchmark.h>

#include <string>

#include "fudg/enumeration.hpp"
#include "fudg/gfl.hpp"
#include "fudg/kirchhoff.hpp"

namespace {

std::string words(std::size_t count) {
  std::string s;
  for (std::size_t i = 0; i < count; ++i) s += (i ? " w" : "w") + std::to_string(i);
  return s;
}

// Chain of fudge expressions: (w0 w1 w2) < w3, (w3 w4 w5) < w6, ...
std::string fudge_chain(std::size_t count) {
  std::string gfl;
  for (std::size_t i = 0; i + 3 < count; i += 3) {
    gfl += "(w" + std::to_string(i) + " w" + std::to_string(i + 1) + " w" + std::to_string(i + 2) + ") < w" +
           std::to_string(i + 3) + "\n";
  }
  return gfl;
}

void BM_KirchhoffComplete(benchmark::State& state) {
  const auto seg = fudg::SupportedEdgeGraph::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fudg::count_arborescences(seg));
}
BENCHMARK(BM_KirchhoffComplete)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMicrosecond);

void BM_PromiscuityKirchhoff(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = fudg::parse_annotation(words(n), fudge_chain(n));
  for (auto _ : state) benchmark::DoNotOptimize(fudg::promiscuity_kirchhoff(g));
}
BENCHMARK(BM_PromiscuityKirchhoff)->Arg(10)->Arg(40)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_PromiscuityExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = fudg::parse_annotation(words(n), fudge_chain(n));
  for (auto _ : state) benchmark::DoNotOptimize(fudg::promiscuity_exact(g));
}
BENCHMARK(BM_PromiscuityExact)->Arg(7)->Arg(10)->Arg(13)->Unit(benchmark::kMicrosecond);

void BM_EnumerateComplete(benchmark::State& state) {
  const auto seg = fudg::SupportedEdgeGraph::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fudg::enumerate_arborescences(seg).size());
}
BENCHMARK(BM_EnumerateComplete)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
