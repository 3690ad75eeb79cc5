#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "lastmile/clustering.hpp"
#include "lastmile/io.hpp"
#include "lastmile/objective.hpp"
#include "lastmile/routing.hpp"
#include "lastmile/solvers.hpp"

using namespace lastmile;

namespace {

Instance bench_instance(int n_points, int n_workers) {
  GeneratorSpec spec;
  spec.n_points = n_points;
  spec.n_workers = n_workers;
  spec.seed = 42;
  return generate_instance(spec);
}

void BM_SolveRoute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = bench_instance(n, 1);
  std::vector<int> ids(static_cast<size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_route(inst.depot(), inst, ids));
  }
}
BENCHMARK(BM_SolveRoute)->Arg(10)->Arg(20)->Arg(40);

void BM_EvaluateCold(benchmark::State& state) {
  const Instance inst = bench_instance(240, 12);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> w(0, 11);
  IntegerSolution sol;
  for (int i = 0; i < inst.n_points(); ++i) sol.assignment.push_back(w(rng));
  for (auto _ : state) {
    Evaluator ev(inst);  // fresh route cache each iteration
    benchmark::DoNotOptimize(ev.evaluate(sol));
  }
}
BENCHMARK(BM_EvaluateCold);

void BM_EvaluateCached(benchmark::State& state) {
  const Instance inst = bench_instance(240, 12);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> w(0, 11);
  IntegerSolution sol;
  for (int i = 0; i < inst.n_points(); ++i) sol.assignment.push_back(w(rng));
  Evaluator ev(inst);
  ev.evaluate(sol);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev.evaluate(sol));
  }
}
BENCHMARK(BM_EvaluateCached);

void BM_KMeans(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 12);
  std::vector<Point2> pts;
  for (const auto& p : inst.points()) pts.push_back(p.pos());
  for (auto _ : state) {
    benchmark::DoNotOptimize(kmeans(pts, 12, 7));
  }
}
BENCHMARK(BM_KMeans)->Arg(240)->Arg(628);

void BM_SpectralEmbedding(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 12);
  std::vector<Point2> pts;
  for (const auto& p : inst.points()) pts.push_back(p.pos());
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_embedding(pts, 12));
  }
}
BENCHMARK(BM_SpectralEmbedding)->Arg(120)->Arg(240);

void BM_RaIe(benchmark::State& state) {
  const Instance inst = bench_instance(240, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_ra_ie(inst, 3));
  }
}
BENCHMARK(BM_RaIe);

void BM_EaIeGeneration(benchmark::State& state) {
  const Instance inst = bench_instance(240, 12);
  EAConfig cfg;
  cfg.max_generations = 5;
  cfg.rng_seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_ea_ie(inst, cfg));
  }
}
BENCHMARK(BM_EaIeGeneration);

}  // namespace

BENCHMARK_MAIN();
