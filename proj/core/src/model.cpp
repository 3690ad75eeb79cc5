#include "lastmile/model.hpp"

#include <limits>

namespace lastmile {

void Instance::validate() const {
  if (points_.empty()) throw std::invalid_argument("Instance: needs at least one point");
  if (n_workers_ < 1) throw std::invalid_argument("Instance: n_workers must be >= 1");
  if (speed_ <= 0.0) throw std::invalid_argument("Instance: speed must be positive");
  if (static_cast<int>(points_.size()) < n_workers_) {
    throw std::invalid_argument("Instance: fewer points than workers");
  }
  for (size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.id != static_cast<int>(i)) {
      throw std::invalid_argument("Instance: point ids must be 0..N-1 in order");
    }
    if (p.t_in < 0.0 || p.t_ex < 0.0) {
      throw std::invalid_argument("Instance: handling times must be non-negative");
    }
  }
}

BoundingBox Instance::point_bbox() const {
  BoundingBox b;
  b.min_x = b.min_y = std::numeric_limits<double>::infinity();
  b.max_x = b.max_y = -std::numeric_limits<double>::infinity();
  for (const auto& p : points_) {
    b.min_x = std::min(b.min_x, p.x);
    b.max_x = std::max(b.max_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

void validate_assignment(const Instance& instance, const IntegerSolution& sol) {
  if (sol.size() != instance.n_points()) {
    throw std::invalid_argument("assignment length does not match instance point count");
  }
  for (int w : sol.assignment) {
    if (w < 0 || w >= instance.n_workers()) {
      throw std::invalid_argument("assignment contains an out-of-range worker index");
    }
  }
}

}  // namespace lastmile
