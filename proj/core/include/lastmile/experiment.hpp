#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lastmile/model.hpp"
#include "lastmile/solvers.hpp"

namespace lastmile {

enum class Algorithm { EaIe, EaCe, RaIe, RaCe, RaEaIe, ClusterAssign };

Algorithm parse_algorithm(const std::string& label);  // "ea-ie", "ra-ce", ...
std::string algorithm_label(Algorithm algo);

struct RunRecord {
  uint64_t seed = 0;
  double fitness = 0.0;
  double wall_time_s = 0.0;
};

// min/max/mean/std of the best fitness over repeated seeded runs.
// std is the population standard deviation.
struct RunStats {
  std::string algorithm;
  int n_runs = 0;
  double min_s = 0.0;
  double max_s = 0.0;
  double mean_s = 0.0;
  double std_s = 0.0;
  std::vector<RunRecord> per_run;
};

RunStats aggregate_stats(const std::string& algorithm,
                         const std::vector<RunRecord>& runs);

struct ExperimentConfig {
  EAConfig ea;
  SeedMix mix;
  ClusterInit init = ClusterInit::kMeans;
};

SolveResult run_algorithm(const Instance& instance, Algorithm algo, uint64_t seed,
                          const ExperimentConfig& config);

// Runs each algorithm n_runs times with seeds base_seed..base_seed+n_runs-1.
std::vector<RunStats> run_experiment(const Instance& instance,
                                     const std::vector<Algorithm>& algorithms,
                                     int n_runs, uint64_t base_seed,
                                     const ExperimentConfig& config);

// Exhaustive search: every assignment, exact TSP per worker. Refuses
// instances beyond N_W^N_p <= 1e6 or more than 8 points.
std::pair<IntegerSolution, Evaluation> brute_force_optimum(const Instance& instance);

// Exact closed-tour length over depot + points by permutation enumeration.
double exact_tour_length(const Point2& depot, const std::vector<Point2>& points);

// Aligned per-worker table, columns (t_OW, t_Int, t_Tra, t_Ext, t_Ret, total).
std::string breakdown_report(const Evaluation& evaluation);

std::string stats_table(const std::vector<RunStats>& stats);

}  // namespace lastmile
