#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "lamptree/explorer.hpp"
#include "lamptree/lamp.hpp"
#include "lamptree/lamp_aut.hpp"
#include "lamptree/mealy.hpp"
#include "lamptree/sampling.hpp"
#include "lamptree/verify.hpp"

using namespace lamptree;

namespace {

void BM_LevelQuotient(benchmark::State& state) {
  auto m = adding_machine();
  auto p = parse_state_word(m, "p");
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto q = level_quotient(m, {p}, level);
    benchmark::DoNotOptimize(q.order());
  }
}
BENCHMARK(BM_LevelQuotient)->Arg(6)->Arg(8)->Arg(10);

void BM_WordFixesLevel(benchmark::State& state) {
  auto m = adding_machine();
  StateWord w(1024, StateLetter{m.state_index("p"), 1});
  for (auto _ : state) {
    bool fixes = word_fixes_level(m, w, 10);
    benchmark::DoNotOptimize(fixes);
  }
}
BENCHMARK(BM_WordFixesLevel);

void BM_ActWord(benchmark::State& state) {
  Rng rng(1);
  auto g = random_element(6, rng, 8, 4);
  std::vector<long long> word(static_cast<std::size_t>(state.range(0)));
  for (auto& d : word) d = rand_range(rng, 0, 5);
  for (auto _ : state) {
    auto img = act_word(g, word);
    benchmark::DoNotOptimize(img.data());
  }
}
BENCHMARK(BM_ActWord)->Arg(64)->Arg(256);

void BM_DecomposePrimePower(benchmark::State& state) {
  Rng rng(2);
  std::vector<LampEndo> endos;
  for (int i = 0; i < 32; ++i) endos.push_back(random_stab_automorphism(27, rng, 4));
  std::size_t i = 0;
  for (auto _ : state) {
    auto word = decompose_stab_prime_power(endos[i % endos.size()]);
    benchmark::DoNotOptimize(word.data());
    ++i;
  }
}
BENCHMARK(BM_DecomposePrimePower);

void BM_ConvolutionInverse(benchmark::State& state) {
  Rng rng(3);
  std::vector<ZkLaurent> units;
  for (int i = 0; i < 32; ++i) units.push_back(random_stab_automorphism(12, rng, 3).i_data());
  std::size_t i = 0;
  for (auto _ : state) {
    auto inv = convolution_inverse(units[i % units.size()]);
    benchmark::DoNotOptimize(inv.is_zero());
    ++i;
  }
}
BENCHMARK(BM_ConvolutionInverse);

void BM_InverseSearch(benchmark::State& state) {
  Rng rng(3);
  std::vector<ZkLaurent> units;
  for (int i = 0; i < 32; ++i) units.push_back(random_stab_automorphism(12, rng, 3).i_data());
  std::size_t i = 0;
  for (auto _ : state) {
    auto inv = convolution_inverse_search(units[i % units.size()]);
    benchmark::DoNotOptimize(inv.has_value());
    ++i;
  }
}
BENCHMARK(BM_InverseSearch);

}  // namespace

BENCHMARK_MAIN();
