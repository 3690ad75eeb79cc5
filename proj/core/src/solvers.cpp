#include "lastmile/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace lastmile {

void EAConfig::validate() const {
  if (population_size < 2) throw std::invalid_argument("EAConfig: population_size must be >= 2");
  if (mutation_prob < 0.0 || mutation_prob > 1.0)
    throw std::invalid_argument("EAConfig: mutation_prob out of [0,1]");
  if (crossover_frac <= 0.0 || crossover_frac >= 1.0)
    throw std::invalid_argument("EAConfig: crossover_frac out of (0,1)");
  if (survival_frac <= 0.0 || survival_frac >= 1.0)
    throw std::invalid_argument("EAConfig: survival_frac out of (0,1)");
}

void SeedMix::validate() const {
  const double fr[] = {frac_random, frac_kmeans, frac_kmeans_mutated, frac_ra, frac_ra_mutated};
  double sum = 0.0;
  for (double f : fr) {
    if (f < 0.0) throw std::invalid_argument("SeedMix: fractions must be non-negative");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("SeedMix: fractions must sum to 1");
}

// -- Operators ----------------------------------------------------------

IntegerSolution crossover_integer(const IntegerSolution& p1, const IntegerSolution& p2,
                                  const std::vector<bool>& mask) {
  if (p1.size() != p2.size() || mask.size() != p1.assignment.size()) {
    throw std::invalid_argument("crossover_integer: length mismatch");
  }
  IntegerSolution child;
  child.assignment.resize(p1.assignment.size());
  for (size_t i = 0; i < mask.size(); ++i) {
    child.assignment[i] = mask[i] ? p1.assignment[i] : p2.assignment[i];
  }
  return child;
}

IntegerSolution mutate_integer(const IntegerSolution& sol, int n_workers,
                               double mutation_prob, std::mt19937_64& rng) {
  IntegerSolution out = sol;
  std::bernoulli_distribution trigger(mutation_prob);
  if (trigger(rng)) {
    std::uniform_int_distribution<size_t> gene(0, out.assignment.size() - 1);
    std::uniform_int_distribution<int> value(0, n_workers - 1);
    out.assignment[gene(rng)] = value(rng);
  }
  return out;
}

CircleSolution crossover_circle_external(const CircleSolution& p1, const CircleSolution& p2,
                                         const std::vector<bool>& mask) {
  if (p1.size() != p2.size() || mask.size() != p1.circles.size()) {
    throw std::invalid_argument("crossover_circle_external: length mismatch");
  }
  CircleSolution child;
  child.circles.resize(p1.circles.size());
  for (size_t i = 0; i < mask.size(); ++i) {
    child.circles[i] = mask[i] ? p1.circles[i] : p2.circles[i];
  }
  return child;
}

CircleSolution crossover_circle_internal(const CircleSolution& p1, const CircleSolution& p2,
                                         const std::vector<bool>& mask) {
  if (p1.size() != p2.size() || mask.size() != 3 * p1.circles.size()) {
    throw std::invalid_argument("crossover_circle_internal: length mismatch");
  }
  CircleSolution child;
  child.circles.resize(p1.circles.size());
  for (size_t i = 0; i < p1.circles.size(); ++i) {
    child.circles[i].cx = mask[3 * i + 0] ? p1.circles[i].cx : p2.circles[i].cx;
    child.circles[i].cy = mask[3 * i + 1] ? p1.circles[i].cy : p2.circles[i].cy;
    child.circles[i].r = mask[3 * i + 2] ? p1.circles[i].r : p2.circles[i].r;
  }
  return child;
}

CircleSolution mutate_circle_smooth(const CircleSolution& sol, std::mt19937_64& rng,
                                    double sigma, double per_gene_prob) {
  if (sigma <= 0.0) throw std::invalid_argument("mutate_circle_smooth: sigma must be positive");
  CircleSolution out = sol;
  std::bernoulli_distribution trigger(per_gene_prob);
  std::normal_distribution<double> noise(0.0, sigma);
  for (auto& c : out.circles) {
    if (trigger(rng)) c.cx += noise(rng);
    if (trigger(rng)) c.cy += noise(rng);
    if (trigger(rng)) c.r = std::max(0.0, c.r + noise(rng));
  }
  return out;
}

CircleSolution mutate_circle_hard(const CircleSolution& sol, std::mt19937_64& rng,
                                  const BoundingBox& bounds, double r_max,
                                  double per_individual_prob) {
  CircleSolution out = sol;
  std::bernoulli_distribution trigger(per_individual_prob);
  if (trigger(rng)) {
    std::uniform_int_distribution<size_t> which(0, out.circles.size() - 1);
    std::uniform_real_distribution<double> ux(bounds.min_x, bounds.max_x);
    std::uniform_real_distribution<double> uy(bounds.min_y, bounds.max_y);
    std::uniform_real_distribution<double> ur(0.0, r_max);
    auto& c = out.circles[which(rng)];
    c.cx = ux(rng);
    c.cy = uy(rng);
    c.r = std::nextafter(ur(rng), r_max);  // keep radius strictly positive
  }
  return out;
}

// -- Shared EA machinery ------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

IntegerSolution random_integer_solution(const Instance& instance, std::mt19937_64& rng) {
  IntegerSolution sol;
  sol.assignment.resize(static_cast<size_t>(instance.n_points()));
  std::uniform_int_distribution<int> worker(0, instance.n_workers() - 1);
  for (auto& g : sol.assignment) g = worker(rng);
  return sol;
}

IntegerSolution labels_to_solution(const std::vector<int>& labels) {
  IntegerSolution sol;
  sol.assignment = labels;
  return sol;
}

IntegerSolution force_one_mutation(const IntegerSolution& sol, int n_workers,
                                   std::mt19937_64& rng) {
  IntegerSolution out = sol;
  std::uniform_int_distribution<size_t> gene(0, out.assignment.size() - 1);
  std::uniform_int_distribution<int> value(0, n_workers - 1);
  out.assignment[gene(rng)] = value(rng);
  return out;
}

std::vector<bool> random_mask(size_t n, double p_from_first, std::mt19937_64& rng) {
  std::bernoulli_distribution take(p_from_first);
  std::vector<bool> mask(n);
  for (size_t i = 0; i < n; ++i) mask[i] = take(rng);
  return mask;
}

// Elitist generational loop shared by EA-IE, EA-CE and RA-EA-IE.
template <typename Genome, typename EvalFn, typename OffspringFn>
SolveResult run_ea(const Instance& /*instance*/, const EAConfig& config,
                   std::vector<Genome> population, EvalFn eval, OffspringFn offspring,
                   std::mt19937_64& rng) {
  const auto t0 = Clock::now();
  const int n = config.population_size;

  struct Scored {
    Genome genome;
    double fitness;
  };
  std::vector<Scored> pop;
  pop.reserve(population.size());
  long evaluations = 0;

  SolveResult result;
  double best_fitness = std::numeric_limits<double>::infinity();
  const Genome* best_genome = nullptr;

  auto score = [&](Genome g) {
    Evaluation ev = eval(g);
    ++evaluations;
    pop.push_back({std::move(g), ev.fitness});
  };
  for (auto& g : population) score(std::move(g));

  auto by_fitness = [](const Scored& a, const Scored& b) { return a.fitness < b.fitness; };
  std::stable_sort(pop.begin(), pop.end(), by_fitness);

  Genome best = pop.front().genome;
  best_fitness = pop.front().fitness;
  result.history.push_back(best_fitness);
  (void)best_genome;

  const int n_survivors = std::max(1, static_cast<int>(std::ceil(config.survival_frac * n)));
  std::uniform_int_distribution<int> pick(0, n_survivors - 1);

  for (int gen = 0; gen < config.max_generations; ++gen) {
    if (elapsed_s(t0) > config.time_budget_s) break;

    pop.resize(static_cast<size_t>(std::min<int>(n_survivors, static_cast<int>(pop.size()))));
    while (static_cast<int>(pop.size()) < n) {
      // Tournament of size 2 among survivors for each parent.
      auto tournament = [&]() -> const Scored& {
        const Scored& a = pop[static_cast<size_t>(pick(rng))];
        const Scored& b = pop[static_cast<size_t>(pick(rng))];
        return a.fitness <= b.fitness ? a : b;
      };
      const Scored& p1 = tournament();
      const Scored& p2 = tournament();
      score(offspring(p1.genome, p2.genome, rng));
    }
    std::stable_sort(pop.begin(), pop.end(), by_fitness);
    if (pop.front().fitness < best_fitness) {
      best_fitness = pop.front().fitness;
      best = pop.front().genome;
    }
    result.history.push_back(best_fitness);
  }

  result.wall_time_s = elapsed_s(t0);
  result.evaluations = evaluations;
  result.best_evaluation = eval(best);
  if constexpr (std::is_same_v<Genome, IntegerSolution>) {
    result.best_solution = std::move(best);
  } else {
    result.best_circles = best;
  }
  return result;
}

double worker_time(const Instance& instance, RouteSolver& routes,
                   const std::vector<int>& ids) {
  if (ids.empty()) return 0.0;
  const Route& route = routes.solve(ids);
  double t = travel_time(route.length(), instance.speed());
  for (int pid : ids) t += instance.point(pid).t_in + instance.point(pid).t_ex;
  return t;
}

std::vector<Point2> instance_points(const Instance& instance) {
  std::vector<Point2> pts;
  pts.reserve(static_cast<size_t>(instance.n_points()));
  for (const auto& p : instance.points()) pts.push_back(p.pos());
  return pts;
}

ClusterResult run_clustering(const Instance& instance, ClusterInit init, uint64_t seed) {
  const auto pts = instance_points(instance);
  return init == ClusterInit::kMeans ? kmeans(pts, instance.n_workers(), seed)
                                     : spectral_cluster(pts, instance.n_workers(), seed);
}

SolveResult ra_ie_from_centroids(const Instance& instance, Evaluator& evaluator,
                                 const std::vector<Point2>& centroids) {
  const int n_workers = instance.n_workers();
  const int n_points = instance.n_points();
  std::vector<bool> taken(static_cast<size_t>(n_points), false);
  std::vector<std::vector<int>> sets(static_cast<size_t>(n_workers));
  std::vector<Point2> position = centroids;  // worker's current location
  std::vector<double> times(static_cast<size_t>(n_workers), 0.0);
  int assigned = 0;

  auto take_nearest = [&](int w) {
    int best_id = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int pid = 0; pid < n_points; ++pid) {
      if (taken[static_cast<size_t>(pid)]) continue;
      const double d = euclidean_distance(position[static_cast<size_t>(w)],
                                          instance.point(pid).pos());
      if (d < best_d) {  // ties -> lowest id via scan order
        best_d = d;
        best_id = pid;
      }
    }
    if (best_id < 0) return false;
    taken[static_cast<size_t>(best_id)] = true;
    sets[static_cast<size_t>(w)].push_back(best_id);
    position[static_cast<size_t>(w)] = instance.point(best_id).pos();
    times[static_cast<size_t>(w)] =
        worker_time(instance, evaluator.routes(), sets[static_cast<size_t>(w)]);
    ++assigned;
    return true;
  };

  // Round 1 assigns one point to every worker unconditionally: with all
  // times at zero the strict below-mean test would assign nothing.
  for (int w = 0; w < n_workers && assigned < n_points; ++w) take_nearest(w);

  while (assigned < n_points) {
    double mean = 0.0;
    for (double t : times) mean += t;
    mean /= n_workers;
    int assigned_before = assigned;
    for (int w = 0; w < n_workers && assigned < n_points; ++w) {
      if (times[static_cast<size_t>(w)] < mean) take_nearest(w);
    }
    if (assigned == assigned_before) {
      // All times equal (all at the mean): hand one point to the
      // lowest-indexed minimum-time worker so the loop always progresses.
      int w_min = 0;
      for (int w = 1; w < n_workers; ++w) {
        if (times[static_cast<size_t>(w)] < times[static_cast<size_t>(w_min)]) w_min = w;
      }
      take_nearest(w_min);
    }
  }

  SolveResult result;
  result.best_solution.assignment.assign(static_cast<size_t>(n_points), 0);
  for (int w = 0; w < n_workers; ++w) {
    for (int pid : sets[static_cast<size_t>(w)]) {
      result.best_solution.assignment[static_cast<size_t>(pid)] = w;
    }
  }
  result.best_evaluation = evaluator.evaluate(result.best_solution);
  result.evaluations = 1;
  result.history.push_back(result.best_evaluation.fitness);
  return result;
}

}  // namespace

// -- Public solvers -----------------------------------------------------

SolveResult solve_ea_ie(const Instance& instance, const EAConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.rng_seed);
  Evaluator evaluator(instance);
  const auto pts = instance_points(instance);

  // Half random, half independent k-means runs.
  std::vector<IntegerSolution> population;
  const int n = config.population_size;
  for (int i = 0; i < n / 2; ++i) population.push_back(random_integer_solution(instance, rng));
  while (static_cast<int>(population.size()) < n) {
    population.push_back(labels_to_solution(kmeans(pts, instance.n_workers(), rng()).labels));
  }

  auto eval = [&](const IntegerSolution& s) { return evaluator.evaluate(s); };
  auto offspring = [&](const IntegerSolution& p1, const IntegerSolution& p2,
                       std::mt19937_64& r) {
    const auto mask = random_mask(p1.assignment.size(), config.crossover_frac, r);
    return mutate_integer(crossover_integer(p1, p2, mask), instance.n_workers(),
                          config.mutation_prob, r);
  };
  return run_ea(instance, config, std::move(population), eval, offspring, rng);
}

SolveResult solve_ea_ce(const Instance& instance, const EAConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.rng_seed);
  Evaluator evaluator(instance);
  const BoundingBox bbox = instance.point_bbox();
  const double diag = std::max(bbox.diagonal(), 1e-9);
  const double sigma = config.smooth_sigma_m > 0.0 ? config.smooth_sigma_m : 0.01 * diag;
  const double r_max = 0.5 * diag;

  std::vector<CircleSolution> population;
  std::uniform_real_distribution<double> ux(bbox.min_x, bbox.max_x);
  std::uniform_real_distribution<double> uy(bbox.min_y, bbox.max_y);
  std::uniform_real_distribution<double> ur(0.0, r_max);
  for (int i = 0; i < config.population_size; ++i) {
    CircleSolution sol;
    sol.circles.resize(static_cast<size_t>(instance.n_workers()));
    for (auto& c : sol.circles) {
      c.cx = ux(rng);
      c.cy = uy(rng);
      c.r = std::nextafter(ur(rng), r_max);
    }
    population.push_back(std::move(sol));
  }

  auto eval = [&](const CircleSolution& s) { return evaluator.evaluate_circles(s); };
  auto offspring = [&](const CircleSolution& p1, const CircleSolution& p2,
                       std::mt19937_64& r) {
    std::bernoulli_distribution external(0.5);
    CircleSolution child =
        external(r)
            ? crossover_circle_external(
                  p1, p2, random_mask(p1.circles.size(), config.crossover_frac, r))
            : crossover_circle_internal(
                  p1, p2, random_mask(3 * p1.circles.size(), config.crossover_frac, r));
    child = mutate_circle_smooth(child, r, sigma, config.smooth_mutation_prob);
    return mutate_circle_hard(child, r, bbox, r_max, config.hard_mutation_prob);
  };
  SolveResult result = run_ea(instance, config, std::move(population), eval, offspring, rng);
  result.best_solution = decode_circles(instance, *result.best_circles).assignment;
  return result;
}

SolveResult solve_ra_ie(const Instance& instance, uint64_t rng_seed, ClusterInit init) {
  Evaluator evaluator(instance);
  const auto t0 = std::chrono::steady_clock::now();
  const ClusterResult clusters = run_clustering(instance, init, rng_seed);
  SolveResult result = ra_ie_from_centroids(instance, evaluator, clusters.centroids);
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

SolveResult solve_ra_ce(const Instance& instance, uint64_t rng_seed, int max_rounds) {
  Evaluator evaluator(instance);
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(rng_seed);
  const int n_workers = instance.n_workers();
  const double diag = std::max(instance.point_bbox().diagonal(), 1e-9);

  const ClusterResult clusters = kmeans(instance_points(instance), n_workers, rng());
  CircleSolution sol;
  sol.circles.resize(static_cast<size_t>(n_workers));
  std::uniform_real_distribution<double> ur(0.05 * diag, 0.25 * diag);
  for (int w = 0; w < n_workers; ++w) {
    sol.circles[static_cast<size_t>(w)] = {clusters.centroids[static_cast<size_t>(w)].x,
                                           clusters.centroids[static_cast<size_t>(w)].y,
                                           ur(rng)};
  }

  // Current membership (overlap -> later worker, uncovered unassigned).
  auto member_sets = [&](const CircleSolution& s) {
    std::vector<std::vector<int>> sets(static_cast<size_t>(n_workers));
    bool all_covered = true;
    for (int pid = 0; pid < instance.n_points(); ++pid) {
      const Point2 p = instance.point(pid).pos();
      int worker = -1;
      for (int w = 0; w < n_workers; ++w) {
        if (s.circles[static_cast<size_t>(w)].contains(p)) worker = w;
      }
      if (worker >= 0) {
        sets[static_cast<size_t>(worker)].push_back(pid);
      } else {
        all_covered = false;
      }
    }
    return std::pair{std::move(sets), all_covered};
  };

  auto [sets, covered] = member_sets(sol);
  std::vector<double> times(static_cast<size_t>(n_workers), 0.0);
  for (int w = 0; w < n_workers; ++w) {
    times[static_cast<size_t>(w)] =
        worker_time(instance, evaluator.routes(), sets[static_cast<size_t>(w)]);
  }

  for (int round = 0; round < max_rounds && !covered; ++round) {
    double mean = 0.0;
    for (double t : times) mean += t;
    mean /= n_workers;
    for (int w = 0; w < n_workers; ++w) {
      auto& circle = sol.circles[static_cast<size_t>(w)];
      const double t = times[static_cast<size_t>(w)];
      if (t < mean) {
        circle.r *= 1.03;
      } else if (t > mean) {
        circle.r *= 0.97;
      } else {
        continue;
      }
      auto [new_sets, now_covered] = member_sets(sol);
      sets = std::move(new_sets);
      covered = now_covered;
      times[static_cast<size_t>(w)] =
          worker_time(instance, evaluator.routes(), sets[static_cast<size_t>(w)]);
    }
  }

  SolveResult result;
  result.best_circles = sol;
  result.best_solution = decode_circles(instance, sol).assignment;
  result.best_evaluation = evaluator.evaluate(result.best_solution);
  result.evaluations = 1;
  result.history.push_back(result.best_evaluation.fitness);
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

SolveResult solve_ra_ea_ie(const Instance& instance, const EAConfig& config,
                           const SeedMix& mix, ClusterInit init) {
  config.validate();
  mix.validate();
  std::mt19937_64 rng(config.rng_seed);
  Evaluator evaluator(instance);
  const auto pts = instance_points(instance);
  const int n = config.population_size;

  // Integer counts per population source; leftovers go to the random share.
  const double fr[] = {mix.frac_random, mix.frac_kmeans, mix.frac_kmeans_mutated,
                       mix.frac_ra, mix.frac_ra_mutated};
  int counts[5];
  int total = 0;
  for (int i = 0; i < 5; ++i) {
    counts[i] = static_cast<int>(std::floor(fr[i] * n + 1e-9));
    total += counts[i];
  }
  counts[0] += n - total;

  // Spectral eigensolve is seed-independent; do it once, reuse per seed.
  std::vector<std::vector<double>> embedding;
  if (init == ClusterInit::Spectral && (counts[1] + counts[2] + counts[3] + counts[4]) > 0) {
    embedding = spectral_embedding(pts, instance.n_workers());
  }
  auto clustering = [&](uint64_t seed) {
    return init == ClusterInit::kMeans
               ? kmeans(pts, instance.n_workers(), seed)
               : cluster_from_embedding(pts, embedding, instance.n_workers(), seed);
  };

  std::vector<IntegerSolution> population;
  population.reserve(static_cast<size_t>(n));
  for (int i = 0; i < counts[0]; ++i) population.push_back(random_integer_solution(instance, rng));
  for (int i = 0; i < counts[1]; ++i) {
    population.push_back(labels_to_solution(clustering(rng()).labels));
  }
  for (int i = 0; i < counts[2]; ++i) {
    population.push_back(force_one_mutation(labels_to_solution(clustering(rng()).labels),
                                            instance.n_workers(), rng));
  }
  for (int i = 0; i < counts[3]; ++i) {
    population.push_back(
        ra_ie_from_centroids(instance, evaluator, clustering(rng()).centroids).best_solution);
  }
  for (int i = 0; i < counts[4]; ++i) {
    population.push_back(force_one_mutation(
        ra_ie_from_centroids(instance, evaluator, clustering(rng()).centroids).best_solution,
        instance.n_workers(), rng));
  }

  auto eval = [&](const IntegerSolution& s) { return evaluator.evaluate(s); };
  auto offspring = [&](const IntegerSolution& p1, const IntegerSolution& p2,
                       std::mt19937_64& r) {
    const auto mask = random_mask(p1.assignment.size(), config.crossover_frac, r);
    return mutate_integer(crossover_integer(p1, p2, mask), instance.n_workers(),
                          config.mutation_prob, r);
  };
  return run_ea(instance, config, std::move(population), eval, offspring, rng);
}

SolveResult solve_cluster_assign(const Instance& instance, uint64_t rng_seed,
                                 ClusterInit init) {
  const auto t0 = std::chrono::steady_clock::now();
  const ClusterResult clusters = run_clustering(instance, init, rng_seed);
  SolveResult result;
  result.best_solution = labels_to_solution(clusters.labels);
  result.best_evaluation = evaluate(instance, result.best_solution);
  result.evaluations = 1;
  result.history.push_back(result.best_evaluation.fitness);
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace lastmile
