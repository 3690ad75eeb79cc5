#include "lastmile/routing.hpp"

#include <algorithm>
#include <limits>

namespace lastmile {

double tour_length(const std::vector<Point2>& tour) {
  double len = 0.0;
  const size_t n = tour.size();
  for (size_t i = 0; i < n; ++i) {
    len += euclidean_distance(tour[i], tour[(i + 1) % n]);
  }
  return len;
}

bool two_opt_improve(std::vector<Point2>& tour) {
  const size_t n = tour.size();
  if (n < 4) return false;
  bool improved_any = false;
  bool improved = true;
  // First-improvement scan, restarted until a full pass finds nothing.
  while (improved) {
    improved = false;
    for (size_t i = 1; i + 1 < n && !improved; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        const Point2& a = tour[i - 1];
        const Point2& b = tour[i];
        const Point2& c = tour[j];
        const Point2& d = tour[(j + 1) % n];
        const double before = euclidean_distance(a, b) + euclidean_distance(c, d);
        const double after = euclidean_distance(a, c) + euclidean_distance(b, d);
        if (after < before - 1e-12) {
          std::reverse(tour.begin() + static_cast<long>(i),
                       tour.begin() + static_cast<long>(j) + 1);
          improved = true;
          improved_any = true;
          break;
        }
      }
    }
  }
  return improved_any;
}

namespace {

// 2-opt over id order, depot fixed at the front of the cycle.
void two_opt_ids(const Point2& depot, const Instance& instance, std::vector<int>& order) {
  const size_t m = order.size();
  if (m < 3) return;
  auto pos = [&](size_t cycle_idx) -> Point2 {
    return cycle_idx == 0 ? depot : instance.point(order[cycle_idx - 1]).pos();
  };
  const size_t n = m + 1;  // cycle nodes incl. depot
  bool improved = true;
  while (improved) {
    improved = false;
    for (size_t i = 1; i + 1 < n && !improved; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        const Point2 a = pos(i - 1);
        const Point2 b = pos(i);
        const Point2 c = pos(j);
        const Point2 d = pos((j + 1) % n);
        const double before = euclidean_distance(a, b) + euclidean_distance(c, d);
        const double after = euclidean_distance(a, c) + euclidean_distance(b, d);
        if (after < before - 1e-12) {
          std::reverse(order.begin() + static_cast<long>(i - 1),
                       order.begin() + static_cast<long>(j));
          improved = true;
          break;
        }
      }
    }
  }
}

}  // namespace

Route solve_route(const Point2& depot, const Instance& instance,
                  const std::vector<int>& point_ids, uint64_t /*rng_seed*/) {
  if (point_ids.empty()) {
    throw std::invalid_argument("solve_route: empty point set");
  }

  // Nearest-neighbor construction from the depot; ties -> lowest id.
  std::vector<int> remaining = point_ids;
  std::sort(remaining.begin(), remaining.end());
  std::vector<int> order;
  order.reserve(remaining.size());
  Point2 current = depot;
  while (!remaining.empty()) {
    size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < remaining.size(); ++i) {
      const double d = euclidean_distance(current, instance.point(remaining[i]).pos());
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    const int id = remaining[best];
    order.push_back(id);
    current = instance.point(id).pos();
    remaining.erase(remaining.begin() + static_cast<long>(best));
  }

  two_opt_ids(depot, instance, order);

  Route route;
  route.d_ow = euclidean_distance(depot, instance.point(order.front()).pos());
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    route.d_tra += euclidean_distance(instance.point(order[i]).pos(),
                                      instance.point(order[i + 1]).pos());
  }
  route.d_ret = euclidean_distance(instance.point(order.back()).pos(), depot);
  route.order = std::move(order);
  return route;
}

size_t RouteSolver::KeyHash::operator()(const std::vector<int>& key) const {
  size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : key) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

const Route& RouteSolver::solve(const std::vector<int>& point_ids, uint64_t rng_seed) {
  std::vector<int> key = point_ids;
  std::sort(key.begin(), key.end());
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Route route = solve_route(instance_.depot(), instance_, key, rng_seed);
  auto [ins, _] = cache_.emplace(std::move(key), std::move(route));
  return ins->second;
}

}  // namespace lastmile
