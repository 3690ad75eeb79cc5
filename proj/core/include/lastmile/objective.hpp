#pragma once

#include <cstdint>
#include <vector>

#include "lastmile/model.hpp"
#include "lastmile/routing.hpp"

namespace lastmile {

struct DecodedAssignment {
  IntegerSolution assignment;
  std::vector<int> uncovered;  // point ids covered by no circle, before fallback
};

// Workers scanned in index order; the highest-indexed covering circle wins.
// Points in no circle fall back to the nearest circle center (ties -> lowest
// worker index).
DecodedAssignment decode_circles(const Instance& instance, const CircleSolution& sol);

// Evaluates assignments against one instance; owns the route cache so that
// repeated evaluations of the same worker subsets are cheap.
class Evaluator {
 public:
  explicit Evaluator(const Instance& instance)
      : instance_(instance), routes_(instance) {}

  Evaluation evaluate(const IntegerSolution& sol, uint64_t rng_seed = 0);
  Evaluation evaluate_circles(const CircleSolution& sol, uint64_t rng_seed = 0);

  const Instance& instance() const { return instance_; }
  RouteSolver& routes() { return routes_; }

 private:
  const Instance& instance_;
  RouteSolver routes_;
};

// One-shot conveniences (fresh cache per call).
Evaluation evaluate(const Instance& instance, const IntegerSolution& sol,
                    uint64_t rng_seed = 0);
Evaluation evaluate_circles(const Instance& instance, const CircleSolution& sol,
                            uint64_t rng_seed = 0);

// Fitness over already-known worker totals (spot checks, reports).
double fitness_of_totals(const std::vector<double>& totals);

}  // namespace lastmile
