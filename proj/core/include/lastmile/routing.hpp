#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lastmile/model.hpp"

namespace lastmile {

// One worker's route: depot -> order[0] -> ... -> order[last] -> depot,
// reported as the three distance legs of the closed tour.
struct Route {
  std::vector<int> order;  // visit order of assigned point ids
  double d_ow = 0.0;       // depot -> first point, meters
  double d_tra = 0.0;      // consecutive inter-point legs, meters
  double d_ret = 0.0;      // last point -> depot, meters

  double length() const { return d_ow + d_tra + d_ret; }
};

// Nearest-neighbor construction from the depot over the closed tour,
// then 2-opt first-improvement until no move improves.
Route solve_route(const Point2& depot, const Instance& instance,
                  const std::vector<int>& point_ids, uint64_t rng_seed = 0);

// 2-opt on a depot-rooted closed tour. tour holds positions; tour[0] is the
// depot and stays fixed. Returns true if any move was applied.
bool two_opt_improve(std::vector<Point2>& tour);

double tour_length(const std::vector<Point2>& tour);

// Memoizes solve_route per instance, keyed by the sorted id-set of the
// worker's points. EA evaluation re-solves identical subsets constantly.
class RouteSolver {
 public:
  explicit RouteSolver(const Instance& instance) : instance_(instance) {}

  const Route& solve(const std::vector<int>& point_ids, uint64_t rng_seed = 0);

  size_t cache_size() const { return cache_.size(); }

 private:
  struct KeyHash {
    size_t operator()(const std::vector<int>& key) const;
  };

  const Instance& instance_;
  std::unordered_map<std::vector<int>, Route, KeyHash> cache_;
};

}  // namespace lastmile
