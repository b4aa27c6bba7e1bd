#include <benchmark/benchmark.h>

#include <srmk/decoder.hpp>
#include <srmk/linalg.hpp>
#include <srmk/random.hpp>

using namespace srmk;

namespace {

struct Setup {
  InterleavedCode code;
  MatrixExt Y;
};

// q = 2, m = 8, blocks of 4, k = n/2, t = min(s, (n-k)/4).
Setup make_setup(std::size_t n, std::size_t s) {
  static const auto F = make_tower(2, 8);
  auto P = LengthPartition::uniform(n / 4, 4);
  const std::size_t k = n / 2;
  const std::size_t t = std::min(s, (n - k) / 4);
  auto code = random_code(F, P, k, n);
  Rng rng(n * 131 + s);
  auto model = sample_error(F, P, random_profile(P, t, F->m() * s, rng), s, true, rng.next());
  auto Y = encode(code.generator(), random_matrix(F, s, k, rng)) + model.E;
  return {InterleavedCode(code, s), Y};
}

void BM_Decode(benchmark::State& state) {
  auto setup = make_setup(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(decode(setup.code, setup.Y));
  state.counters["n"] = static_cast<double>(state.range(0));
  state.counters["s"] = static_cast<double>(state.range(1));
}
BENCHMARK(BM_Decode)->ArgsProduct({{32, 64, 128}, {8}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Decode)->ArgsProduct({{128}, {4, 16, 32}})->Unit(benchmark::kMicrosecond);

void BM_Rref(benchmark::State& state) {
  const auto F = make_tower(2, 8);
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  auto M = random_matrix(F, n / 2, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(M));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMicrosecond);

void BM_FieldMul(benchmark::State& state) {
  const auto F = make_tower(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  Rng rng(2);
  std::vector<FieldTower::value_type> xs(1024);
  for (auto& x : xs) x = rng.below(F->order());
  for (auto _ : state) {
    FieldTower::value_type acc = 1;
    for (auto x : xs) acc = F->add(F->mul(acc, x), x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_FieldMul)->Args({2, 8})->Args({5, 2})->Args({3, 14});

void BM_MinDistance(benchmark::State& state) {
  const auto F = make_tower(5, 2, {2, 4, 1});
  auto code = random_code(F, LengthPartition({2, 2, 2}), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(min_sum_rank_distance(code, 1'000'000, 1));
}
BENCHMARK(BM_MinDistance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
