#include <benchmark/benchmark.h>

#include <string>

#include "fudg/gfl.hpp"
#include "fudg/validate.hpp"

namespace {

const char* kSentence = "Found the scarriest mystery door in my school . I'M SO CURIOUS D:";
const char* kGfl =
    "Found** < (the scarriest mystery door*)\nFound < in < (my > school)\nI'M** < (SO > CURIOUS)\nD:**\nmy = I'M\n";

void BM_ParseFragment(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fudg::parse_fragment("Found** < (the scarriest mystery door*)"));
}
BENCHMARK(BM_ParseFragment);

void BM_ParseAnnotation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fudg::parse_annotation(kSentence, kGfl));
}
BENCHMARK(BM_ParseAnnotation);

void BM_Validate(benchmark::State& state) {
  const auto g = fudg::parse_annotation(kSentence, kGfl);
  for (auto _ : state) benchmark::DoNotOptimize(fudg::validate(g));
}
BENCHMARK(BM_Validate);

void BM_EmitGfl(benchmark::State& state) {
  const auto g = fudg::parse_annotation(kSentence, kGfl);
  for (auto _ : state) benchmark::DoNotOptimize(fudg::emit_gfl(g));
}
BENCHMARK(BM_EmitGfl);

}  // namespace
