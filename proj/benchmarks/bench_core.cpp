#include <benchmark/benchmark.h>

#include "ultra/canon.hpp"
#include "ultra/dendrogram.hpp"
#include "ultra/embed.hpp"
#include "ultra/gen.hpp"
#include "ultra/ghdist.hpp"
#include "ultra/order.hpp"

using namespace ultra;

namespace {

UltrametricSpace bench_space(std::size_t n, std::uint64_t seed) {
  GenConfig cfg;
  cfg.n = n;
  cfg.height_set = {Rational(1),     Rational(3, 2), Rational(2), Rational(3),
                    Rational(7, 2),  Rational(4),    Rational(5), Rational(6),
                    Rational(13, 2), Rational(8)};
  cfg.seed = seed;
  cfg.max_arity = 3;
  return random_space(cfg);
}

void BM_dendrogram_of(benchmark::State& state) {
  const auto space = bench_space(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dendrogram_of(space));
}
BENCHMARK(BM_dendrogram_of)->Arg(16)->Arg(64)->Arg(256);

void BM_canonical_signature(benchmark::State& state) {
  const auto space = bench_space(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_signature(space));
}
BENCHMARK(BM_canonical_signature)->Arg(16)->Arg(64)->Arg(256);

void BM_quotient_mid_level(benchmark::State& state) {
  const auto space = bench_space(static_cast<std::size_t>(state.range(0)), 3);
  const Rational level = diameter(space).half();
  for (auto _ : state) benchmark::DoNotOptimize(quotient(space, level));
}
BENCHMARK(BM_quotient_mid_level)->Arg(16)->Arg(64)->Arg(256);

void BM_ugh(benchmark::State& state) {
  const auto x = bench_space(static_cast<std::size_t>(state.range(0)), 4);
  const auto y = bench_space(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(ugh(x, y));
}
BENCHMARK(BM_ugh)->Arg(16)->Arg(64);

void BM_ugh_scan(benchmark::State& state) {
  const auto x = bench_space(static_cast<std::size_t>(state.range(0)), 4);
  const auto y = bench_space(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(ugh(x, y, UghMode::linear_scan));
}
BENCHMARK(BM_ugh_scan)->Arg(16)->Arg(64);

void BM_admissible_order(benchmark::State& state) {
  const auto space = bench_space(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(admissible_order(space));
}
BENCHMARK(BM_admissible_order)->Arg(16)->Arg(64)->Arg(256);

void BM_embed_finite(benchmark::State& state) {
  const auto space = bench_space(static_cast<std::size_t>(state.range(0)), 7);
  const auto ord = admissible_order(space);
  for (auto _ : state) benchmark::DoNotOptimize(embed_finite(space, ord));
}
BENCHMARK(BM_embed_finite)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
