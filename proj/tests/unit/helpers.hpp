#pragma once

#include <random>
#include <vector>

#include "lastmile/model.hpp"

namespace lastmile::testing {

inline Instance make_instance(Point2 depot, std::vector<Point2> coords, int n_workers,
                              double speed = 1.0, double t_in = 0.0, double t_ex = 0.0) {
  std::vector<DeliveryPoint> points;
  points.reserve(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    points.push_back({static_cast<int>(i), coords[i].x, coords[i].y, t_in, t_ex});
  }
  return Instance(depot, std::move(points), n_workers, speed);
}

inline Instance random_instance(uint64_t seed, int n_points, int n_workers,
                                double box = 1000.0, double speed = 1.0,
                                bool random_handling = false) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, box);
  std::uniform_real_distribution<double> handling(0.0, 200.0);
  std::vector<DeliveryPoint> points;
  for (int i = 0; i < n_points; ++i) {
    points.push_back({i, coord(rng), coord(rng), random_handling ? handling(rng) : 0.0,
                      random_handling ? handling(rng) : 0.0});
  }
  return Instance({box / 2, box / 2}, std::move(points), n_workers, speed);
}

}  // namespace lastmile::testing
