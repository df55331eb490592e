#include <benchmark/benchmark.h>

#include "hyperloc/fox.hpp"
#include "hyperloc/kernels/bareiss.hpp"
#include "hyperloc/kernels/fox_eval.hpp"
#include "hyperloc/kernels/neighborly.hpp"

using namespace hyperloc;

namespace {

kernels::PartitionProblem neighborly_problem(int r) {
  const Arrangement a = family(r > 0 ? "monomial_deletion" : "monomial_full", r > 0 ? r : 2);
  kernels::PartitionProblem p;
  p.n = static_cast<int>(a.size());
  for (const auto& f : a.flats_of_rank(2)) p.constraints.push_back(f.indices);
  return p;
}

struct FoxCase {
  LaurentMatrix jacobian;
  std::vector<RatFunc> character;
};

const FoxCase& fox_case() {
  static const FoxCase c = [] {
    const Arrangement d2 = family("monomial_deletion", 2);
    const Character t = decone_character(component_Cq_point(2, 1), d2, 0);
    return FoxCase{fox_jacobian(deconed_presentation(d2, 0)), t.coords};
  }();
  return c;
}

const PolyMatrix& bareiss_case() {
  static const PolyMatrix m = [] {
    const FoxCase& c = fox_case();
    return clear_denominators(kernels::evaluate_serial(c.jacobian, c.character));
  }();
  return m;
}

void BM_NeighborlySerial(benchmark::State& state) {
  const auto p = neighborly_problem(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::neighborly_search_serial(p, 1'000'000'000ULL));
}

void BM_NeighborlyOmp(benchmark::State& state) {
  const auto p = neighborly_problem(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::neighborly_search_omp(p, 1'000'000'000ULL));
}

void BM_BareissSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bareiss_rank_serial(bareiss_case()));
}

void BM_BareissOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bareiss_rank_omp(bareiss_case()));
}

void BM_FoxEvalSerial(benchmark::State& state) {
  const FoxCase& c = fox_case();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_serial(c.jacobian, c.character));
}

void BM_FoxEvalOmp(benchmark::State& state) {
  const FoxCase& c = fox_case();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_omp(c.jacobian, c.character));
}

}  // namespace

// Argument 0 is the full monomial arrangement A_2; r > 0 is D_r.
BENCHMARK(BM_NeighborlySerial)->Arg(0)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NeighborlyOmp)->Arg(0)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FoxEvalSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FoxEvalOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
