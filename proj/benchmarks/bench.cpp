#include <benchmark/benchmark.h>

#include <random>

#include "rtc/burau.hpp"
#include "rtc/modular.hpp"
#include "rtc/order.hpp"

namespace {

rtc::BraidWord random_word(std::mt19937& rng, int strands, int len) {
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<rtc::Letter> letters;
  for (int i = 0; i < len; ++i) letters.push_back({idx(rng), sign(rng) ? 1 : -1});
  return rtc::BraidWord(strands, std::move(letters));
}

void BM_BurauProduct(benchmark::State& state) {
  std::mt19937 rng(42);
  rtc::BraidWord w = random_word(rng, static_cast<int>(state.range(0)), 40);
  for (auto _ : state) benchmark::DoNotOptimize(rtc::burau(w));
}
BENCHMARK(BM_BurauProduct)->Arg(3)->Arg(5)->Arg(7);

void BM_HandleReduce(benchmark::State& state) {
  std::mt19937 rng(43);
  rtc::BraidWord w = random_word(rng, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rtc::handle_reduce(w));
}
BENCHMARK(BM_HandleReduce)->Arg(20)->Arg(60);

void BM_GroupClosure(benchmark::State& state) {
  std::vector<rtc::ModMatrix> gens;
  for (int i = 1; i <= 2; ++i)
    gens.push_back(
        rtc::reduce_mod(rtc::symplectic(rtc::BraidWord(3, {{i, 1}})), 3));
  for (auto _ : state) benchmark::DoNotOptimize(rtc::group_closure(gens));
}
BENCHMARK(BM_GroupClosure);

}  // namespace

BENCHMARK_MAIN();
