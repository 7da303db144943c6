#include <benchmark/benchmark.h>

#include <random>

#include "gkpack/gen.hpp"
#include "gkpack/lpack.hpp"
#include "gkpack/ratios.hpp"
#include "gkpack/shelf.hpp"
#include "gkpack/solvers.hpp"
#include "gkpack/steinberg.hpp"

using namespace gk;

namespace {

Instance corpus_instance(int seed) {
  return generate_instance(3 + seed % 5, 8 + seed % 8, seed,
                           static_cast<GenProfile>(seed % 4));
}

void BM_Oracle(benchmark::State& state) {
  auto inst = corpus_instance((int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(inst).profit);
}
BENCHMARK(BM_Oracle)->Arg(1)->Arg(7)->Arg(42);

void BM_SolveCardinality(benchmark::State& state) {
  auto inst = corpus_instance((int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_cardinality(inst, Rational(1, 13)).best_profit);
}
BENCHMARK(BM_SolveCardinality)->Arg(1)->Arg(7)->Arg(42);

void BM_SolveWeighted(benchmark::State& state) {
  auto inst = corpus_instance((int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_weighted(inst, Rational(1, 13)).best_profit);
}
BENCHMARK(BM_SolveWeighted)->Arg(1)->Arg(7)->Arg(42);

void BM_LpackPtas(benchmark::State& state) {
  LInstance li;
  li.shape = {20, 20, 20};
  std::mt19937_64 rng(state.range(0));
  for (int i = 1; i <= 8; ++i) {
    Item it{i, 11 + (long long)(rng() % 10), 1 + (long long)(rng() % 20), 1 + (long long)(rng() % 9)};
    li.hor.push_back(it);
  }
  for (auto _ : state) benchmark::DoNotOptimize(lpack_ptas(li, Rational(1, 2)).profit);
}
BENCHMARK(BM_LpackPtas)->Arg(5);

void BM_Nfdh(benchmark::State& state) {
  std::mt19937_64 rng(9);
  std::vector<Item> items;
  for (int i = 1; i <= (int)state.range(0); ++i)
    items.push_back({i, 1 + (long long)(rng() % 10), 1 + (long long)(rng() % 10), 1});
  for (auto _ : state) benchmark::DoNotOptimize(nfdh_pack(items, 100, 100).packing.placements.size());
}
BENCHMARK(BM_Nfdh)->Arg(64)->Arg(256);

void BM_Steinberg(benchmark::State& state) {
  std::mt19937_64 rng(13);
  std::vector<Item> items;
  for (int i = 1; i <= (int)state.range(0); ++i)
    items.push_back({i, 1 + (long long)(rng() % 20), 1 + (long long)(rng() % 20), 1});
  while (!items.empty() && !steinberg_condition(items, 100, 100)) items.pop_back();
  for (auto _ : state) benchmark::DoNotOptimize(steinberg_pack(items, 100, 100).placements.size());
}
BENCHMARK(BM_Steinberg)->Arg(16)->Arg(48);

void BM_CaseTable(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& row : case_table()) benchmark::DoNotOptimize(solve_case_lp(row.active));
  }
}
BENCHMARK(BM_CaseTable);

}  // namespace
