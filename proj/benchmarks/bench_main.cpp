#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "hopfalg/serialize.hpp"

using namespace hopfalg;

namespace {

Presentation fixture(const char* name) {
  std::ifstream in(std::string(HOPFALG_FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return *parse_document(ss.str()).presentation;
}

void BM_Rank(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  Mat m = random_matrix(Field::prime(7), n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);

void BM_DualModule(benchmark::State& state) {
  AlgebraPtr r = algebra_matrix2(Field::prime(7));
  Bimodule m = free_bimodule(r, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dual_module(m));
}
BENCHMARK(BM_DualModule)->Arg(1)->Arg(2);

void BM_CheckUnitCoalgebroid(benchmark::State& state) {
  Coalgebroid c = unit_coalgebroid(algebra_truncated_polynomial(Field::prime(7), static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_coalgebroid(c));
}
BENCHMARK(BM_CheckUnitCoalgebroid)->Arg(2)->Arg(3);

void BM_ReconstructC2(benchmark::State& state) {
  Presentation p = fixture("c2.json");
  ReconstructOptions opt;
  opt.roundtrip = false;
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(p, opt));
}
BENCHMARK(BM_ReconstructC2)->Unit(benchmark::kMillisecond);

void BM_ReconstructSwap(benchmark::State& state) {
  Presentation p = fixture("swap.json");
  ReconstructOptions opt;
  opt.roundtrip = false;
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(p, opt));
}
BENCHMARK(BM_ReconstructSwap)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
