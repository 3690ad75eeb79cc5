#include "lastmile/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "lastmile/objective.hpp"

namespace lastmile {

Algorithm parse_algorithm(const std::string& label) {
  if (label == "ea-ie") return Algorithm::EaIe;
  if (label == "ea-ce") return Algorithm::EaCe;
  if (label == "ra-ie") return Algorithm::RaIe;
  if (label == "ra-ce") return Algorithm::RaCe;
  if (label == "ra-ea-ie") return Algorithm::RaEaIe;
  if (label == "cluster") return Algorithm::ClusterAssign;
  throw std::invalid_argument("unknown algorithm: " + label);
}

std::string algorithm_label(Algorithm algo) {
  switch (algo) {
    case Algorithm::EaIe: return "ea-ie";
    case Algorithm::EaCe: return "ea-ce";
    case Algorithm::RaIe: return "ra-ie";
    case Algorithm::RaCe: return "ra-ce";
    case Algorithm::RaEaIe: return "ra-ea-ie";
    case Algorithm::ClusterAssign: return "cluster";
  }
  throw std::logic_error("unreachable");
}

SolveResult run_algorithm(const Instance& instance, Algorithm algo, uint64_t seed,
                          const ExperimentConfig& config) {
  EAConfig ea = config.ea;
  ea.rng_seed = seed;
  switch (algo) {
    case Algorithm::EaIe: return solve_ea_ie(instance, ea);
    case Algorithm::EaCe: return solve_ea_ce(instance, ea);
    case Algorithm::RaIe: return solve_ra_ie(instance, seed, config.init);
    case Algorithm::RaCe: return solve_ra_ce(instance, seed);
    case Algorithm::RaEaIe: return solve_ra_ea_ie(instance, ea, config.mix, config.init);
    case Algorithm::ClusterAssign: return solve_cluster_assign(instance, seed, config.init);
  }
  throw std::logic_error("unreachable");
}

RunStats aggregate_stats(const std::string& algorithm,
                         const std::vector<RunRecord>& runs) {
  if (runs.empty()) throw std::invalid_argument("aggregate_stats: no runs");
  RunStats s;
  s.algorithm = algorithm;
  s.n_runs = static_cast<int>(runs.size());
  s.per_run = runs;
  s.min_s = s.max_s = runs.front().fitness;
  double sum = 0.0;
  for (const auto& r : runs) {
    s.min_s = std::min(s.min_s, r.fitness);
    s.max_s = std::max(s.max_s, r.fitness);
    sum += r.fitness;
  }
  s.mean_s = sum / s.n_runs;
  double sq = 0.0;
  for (const auto& r : runs) {
    const double d = r.fitness - s.mean_s;
    sq += d * d;
  }
  s.std_s = std::sqrt(sq / s.n_runs);  // population std
  return s;
}

std::vector<RunStats> run_experiment(const Instance& instance,
                                     const std::vector<Algorithm>& algorithms,
                                     int n_runs, uint64_t base_seed,
                                     const ExperimentConfig& config) {
  if (n_runs < 1) throw std::invalid_argument("run_experiment: n_runs must be >= 1");
  std::vector<RunStats> out;
  out.reserve(algorithms.size());
  for (Algorithm algo : algorithms) {
    std::vector<RunRecord> runs;
    runs.reserve(static_cast<size_t>(n_runs));
    for (int i = 0; i < n_runs; ++i) {
      const uint64_t seed = base_seed + static_cast<uint64_t>(i);
      const SolveResult res = run_algorithm(instance, algo, seed, config);
      runs.push_back({seed, res.best_evaluation.fitness, res.wall_time_s});
    }
    out.push_back(aggregate_stats(algorithm_label(algo), runs));
  }
  return out;
}

namespace {

std::pair<double, std::vector<size_t>> exact_tour(const Point2& depot,
                                                  const std::vector<Point2>& points) {
  const size_t m = points.size();
  if (m == 0) throw std::invalid_argument("exact_tour: empty point set");
  std::vector<size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<size_t> best_perm = perm;
  do {
    double len = euclidean_distance(depot, points[perm.front()]);
    for (size_t i = 0; i + 1 < m; ++i) {
      len += euclidean_distance(points[perm[i]], points[perm[i + 1]]);
    }
    len += euclidean_distance(points[perm.back()], depot);
    if (len < best) {
      best = len;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, best_perm};
}

}  // namespace

double exact_tour_length(const Point2& depot, const std::vector<Point2>& points) {
  return exact_tour(depot, points).first;
}

std::pair<IntegerSolution, Evaluation> brute_force_optimum(const Instance& instance) {
  const int n_points = instance.n_points();
  const int n_workers = instance.n_workers();
  const double combos = std::pow(static_cast<double>(n_workers), n_points);
  if (combos > 1e6 || n_points > 8) {
    std::ostringstream msg;
    msg << "brute_force_optimum: instance too large (needs N_W^N_p <= 1e6 and N_p <= 8; got "
        << n_workers << "^" << n_points << ")";
    throw std::invalid_argument(msg.str());
  }

  // Exact per-worker time, memoized on the subset bitmask.
  std::vector<double> subset_time(static_cast<size_t>(1) << n_points, -1.0);
  auto worker_time = [&](unsigned mask) {
    if (mask == 0) return 0.0;
    double& memo = subset_time[mask];
    if (memo >= 0.0) return memo;
    std::vector<Point2> pts;
    double handling = 0.0;
    for (int pid = 0; pid < n_points; ++pid) {
      if (mask & (1u << pid)) {
        pts.push_back(instance.point(pid).pos());
        handling += instance.point(pid).t_in + instance.point(pid).t_ex;
      }
    }
    memo = exact_tour_length(instance.depot(), pts) / instance.speed() + handling;
    return memo;
  };

  IntegerSolution best;
  double best_fitness = std::numeric_limits<double>::infinity();
  std::vector<int> assignment(static_cast<size_t>(n_points), 0);
  std::vector<unsigned> masks(static_cast<size_t>(n_workers), 0);

  // Lexicographic enumeration; first optimum found is the smallest.
  while (true) {
    for (auto& m : masks) m = 0;
    for (int pid = 0; pid < n_points; ++pid) {
      masks[static_cast<size_t>(assignment[static_cast<size_t>(pid)])] |= 1u << pid;
    }
    double mx = -std::numeric_limits<double>::infinity();
    double mn = std::numeric_limits<double>::infinity();
    for (int w = 0; w < n_workers; ++w) {
      const double t = worker_time(masks[static_cast<size_t>(w)]);
      mx = std::max(mx, t);
      mn = std::min(mn, t);
    }
    if (mx - mn < best_fitness - 1e-12) {
      best_fitness = mx - mn;
      best.assignment = assignment;
    }
    int i = n_points - 1;
    while (i >= 0 && assignment[static_cast<size_t>(i)] == n_workers - 1) {
      assignment[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++assignment[static_cast<size_t>(i)];
  }

  // Rebuild the full evaluation from the exact tours of the winner.
  Evaluation ev;
  ev.per_worker.resize(static_cast<size_t>(n_workers));
  double mx = -std::numeric_limits<double>::infinity();
  double mn = std::numeric_limits<double>::infinity();
  for (int w = 0; w < n_workers; ++w) {
    auto& bd = ev.per_worker[static_cast<size_t>(w)];
    std::vector<Point2> pts;
    for (int pid = 0; pid < n_points; ++pid) {
      if (best.assignment[static_cast<size_t>(pid)] == w) {
        pts.push_back(instance.point(pid).pos());
        bd.t_int += instance.point(pid).t_in;
        bd.t_ext += instance.point(pid).t_ex;
      }
    }
    if (!pts.empty()) {
      const auto [len, order] = exact_tour(instance.depot(), pts);
      double d_tra = 0.0;
      for (size_t i = 0; i + 1 < order.size(); ++i) {
        d_tra += euclidean_distance(pts[order[i]], pts[order[i + 1]]);
      }
      bd.t_ow = euclidean_distance(instance.depot(), pts[order.front()]) / instance.speed();
      bd.t_tra = d_tra / instance.speed();
      bd.t_ret = euclidean_distance(pts[order.back()], instance.depot()) / instance.speed();
      bd.total = bd.t_ow + bd.t_int + bd.t_tra + bd.t_ext + bd.t_ret;
    } else {
      bd.t_int = bd.t_ext = 0.0;
    }
    mx = std::max(mx, bd.total);
    mn = std::min(mn, bd.total);
    ev.total_time += bd.total;
  }
  ev.fitness = mx - mn;
  return {best, ev};
}

std::string breakdown_report(const Evaluation& evaluation) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << std::setw(10) << "worker" << std::setw(12) << "t_OW" << std::setw(12) << "t_Int"
     << std::setw(12) << "t_Tra" << std::setw(12) << "t_Ext" << std::setw(12) << "t_Ret"
     << std::setw(12) << "total" << "\n";
  for (size_t w = 0; w < evaluation.per_worker.size(); ++w) {
    const auto& bd = evaluation.per_worker[w];
    os << std::setw(10) << ("Worker " + std::to_string(w + 1)) << std::setw(12) << bd.t_ow
       << std::setw(12) << bd.t_int << std::setw(12) << bd.t_tra << std::setw(12) << bd.t_ext
       << std::setw(12) << bd.t_ret << std::setw(12) << bd.total << "\n";
  }
  os << "fitness " << evaluation.fitness << "  total " << evaluation.total_time << "\n";
  return os.str();
}

std::string stats_table(const std::vector<RunStats>& stats) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << std::setw(10) << "algorithm" << std::setw(8) << "runs" << std::setw(12) << "Min.(s)"
     << std::setw(12) << "Max.(s)" << std::setw(12) << "Mean(s)" << std::setw(12) << "Std.(s)"
     << "\n";
  for (const auto& s : stats) {
    os << std::setw(10) << s.algorithm << std::setw(8) << s.n_runs << std::setw(12) << s.min_s
       << std::setw(12) << s.max_s << std::setw(12) << s.mean_s << std::setw(12) << s.std_s
       << "\n";
  }
  return os.str();
}

}  // namespace lastmile
