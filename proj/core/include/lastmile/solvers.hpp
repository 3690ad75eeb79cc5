#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lastmile/clustering.hpp"
#include "lastmile/model.hpp"
#include "lastmile/objective.hpp"

namespace lastmile {

struct EAConfig {
  int population_size = 40;
  int max_generations = 200;
  double time_budget_s = 2400.0;  // 40 min; CLI callers usually shrink this
  double mutation_prob = 0.05;
  double crossover_frac = 0.5;
  double survival_frac = 0.5;
  uint64_t rng_seed = 0;

  // Circle-encoding operator rates; smooth sigma defaults to 1% of the
  // point bbox diagonal when <= 0.
  double smooth_mutation_prob = 0.3;
  double hard_mutation_prob = 0.05;
  double smooth_sigma_m = -1.0;

  void validate() const;
};

// Initial-population composition for the ensemble solver.
struct SeedMix {
  double frac_random = 0.2;
  double frac_kmeans = 0.2;
  double frac_kmeans_mutated = 0.2;
  double frac_ra = 0.2;
  double frac_ra_mutated = 0.2;

  void validate() const;
};

enum class ClusterInit { kMeans, Spectral };

struct SolveResult {
  IntegerSolution best_solution;
  std::optional<CircleSolution> best_circles;  // circle-encoded solvers only
  Evaluation best_evaluation;
  std::vector<double> history;  // best-ever fitness per generation/round
  double wall_time_s = 0.0;
  long evaluations = 0;
};

// -- Genetic operators --------------------------------------------------

IntegerSolution crossover_integer(const IntegerSolution& p1, const IntegerSolution& p2,
                                  const std::vector<bool>& mask);

// With probability mutation_prob, one uniformly chosen gene is replaced by a
// uniform worker index (which may equal the old value).
IntegerSolution mutate_integer(const IntegerSolution& sol, int n_workers,
                               double mutation_prob, std::mt19937_64& rng);

CircleSolution crossover_circle_external(const CircleSolution& p1, const CircleSolution& p2,
                                         const std::vector<bool>& mask);

// mask has 3 entries per circle, ordered (cx, cy, r).
CircleSolution crossover_circle_internal(const CircleSolution& p1, const CircleSolution& p2,
                                         const std::vector<bool>& mask);

CircleSolution mutate_circle_smooth(const CircleSolution& sol, std::mt19937_64& rng,
                                    double sigma, double per_gene_prob);

CircleSolution mutate_circle_hard(const CircleSolution& sol, std::mt19937_64& rng,
                                  const BoundingBox& bounds, double r_max,
                                  double per_individual_prob);

// -- Solvers ------------------------------------------------------------

SolveResult solve_ea_ie(const Instance& instance, const EAConfig& config);
SolveResult solve_ea_ce(const Instance& instance, const EAConfig& config);
SolveResult solve_ra_ie(const Instance& instance, uint64_t rng_seed,
                        ClusterInit init = ClusterInit::kMeans);
SolveResult solve_ra_ce(const Instance& instance, uint64_t rng_seed,
                        int max_rounds = 10000);
SolveResult solve_ra_ea_ie(const Instance& instance, const EAConfig& config,
                           const SeedMix& mix = {},
                           ClusterInit init = ClusterInit::kMeans);

// Assignment induced by a clustering run alone (labels are worker indices);
// the clustering-only baseline.
SolveResult solve_cluster_assign(const Instance& instance, uint64_t rng_seed,
                                 ClusterInit init = ClusterInit::kMeans);

}  // namespace lastmile
