#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lastmile {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline double euclidean_distance(const Point2& a, const Point2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// t = D / s
inline double travel_time(double distance_m, double speed_m_s) {
  if (speed_m_s <= 0.0) {
    throw std::invalid_argument("travel_time: speed must be positive");
  }
  return distance_m / speed_m_s;
}

// One package drop: planar position plus internal/external handling times.
struct DeliveryPoint {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  double t_in = 0.0;  // internal handling, seconds
  double t_ex = 0.0;  // external handling, seconds

  Point2 pos() const { return {x, y}; }
};

struct BoundingBox {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  double diagonal() const { return std::hypot(width(), height()); }
};

// Immutable problem description. Point ids are 0..n_points()-1 in order.
class Instance {
 public:
  Instance(Point2 depot, std::vector<DeliveryPoint> points, int n_workers,
           double speed_m_s, std::string name = "")
      : depot_(depot),
        points_(std::move(points)),
        n_workers_(n_workers),
        speed_(speed_m_s),
        name_(std::move(name)) {
    validate();
  }

  const Point2& depot() const { return depot_; }
  const std::vector<DeliveryPoint>& points() const { return points_; }
  const DeliveryPoint& point(int id) const { return points_[static_cast<size_t>(id)]; }
  int n_points() const { return static_cast<int>(points_.size()); }
  int n_workers() const { return n_workers_; }
  double speed() const { return speed_; }
  const std::string& name() const { return name_; }

  BoundingBox point_bbox() const;

 private:
  void validate() const;

  Point2 depot_;
  std::vector<DeliveryPoint> points_;
  int n_workers_;
  double speed_;
  std::string name_;
};

// Direct encoding: one worker index per delivery point.
struct IntegerSolution {
  std::vector<int> assignment;

  int size() const { return static_cast<int>(assignment.size()); }
};

struct Circle {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;

  Point2 center() const { return {cx, cy}; }
  bool contains(const Point2& p) const { return euclidean_distance(center(), p) <= r; }
};

// Indirect encoding: one circular work zone per worker.
struct CircleSolution {
  std::vector<Circle> circles;

  int size() const { return static_cast<int>(circles.size()); }
};

// Five-component working time of one worker; total is their sum.
struct TimeBreakdown {
  double t_ow = 0.0;   // depot -> first point
  double t_int = 0.0;  // sum of internal handling times
  double t_tra = 0.0;  // inter-point travel
  double t_ext = 0.0;  // sum of external handling times
  double t_ret = 0.0;  // last point -> depot
  double total = 0.0;
};

struct Evaluation {
  std::vector<TimeBreakdown> per_worker;
  double fitness = 0.0;     // max total - min total
  double total_time = 0.0;  // sum of all worker totals
};

void validate_assignment(const Instance& instance, const IntegerSolution& sol);

}  // namespace lastmile
