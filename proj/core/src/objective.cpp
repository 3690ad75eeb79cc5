#include "lastmile/objective.hpp"

#include <algorithm>
#include <limits>

namespace lastmile {

DecodedAssignment decode_circles(const Instance& instance, const CircleSolution& sol) {
  if (sol.size() != instance.n_workers()) {
    throw std::invalid_argument("decode_circles: circle count != worker count");
  }
  DecodedAssignment out;
  out.assignment.assignment.assign(static_cast<size_t>(instance.n_points()), -1);

  for (int pid = 0; pid < instance.n_points(); ++pid) {
    const Point2 p = instance.point(pid).pos();
    int worker = -1;
    for (int w = 0; w < sol.size(); ++w) {
      if (sol.circles[static_cast<size_t>(w)].contains(p)) worker = w;  // last wins
    }
    if (worker < 0) {
      out.uncovered.push_back(pid);
      double best_d = std::numeric_limits<double>::infinity();
      for (int w = 0; w < sol.size(); ++w) {
        const double d = euclidean_distance(sol.circles[static_cast<size_t>(w)].center(), p);
        if (d < best_d) {
          best_d = d;
          worker = w;
        }
      }
    }
    out.assignment.assignment[static_cast<size_t>(pid)] = worker;
  }
  return out;
}

Evaluation Evaluator::evaluate(const IntegerSolution& sol, uint64_t rng_seed) {
  validate_assignment(instance_, sol);

  std::vector<std::vector<int>> per_worker_ids(static_cast<size_t>(instance_.n_workers()));
  for (int pid = 0; pid < instance_.n_points(); ++pid) {
    per_worker_ids[static_cast<size_t>(sol.assignment[static_cast<size_t>(pid)])].push_back(pid);
  }

  Evaluation ev;
  ev.per_worker.resize(static_cast<size_t>(instance_.n_workers()));
  double max_t = -std::numeric_limits<double>::infinity();
  double min_t = std::numeric_limits<double>::infinity();
  for (int w = 0; w < instance_.n_workers(); ++w) {
    auto& bd = ev.per_worker[static_cast<size_t>(w)];
    const auto& ids = per_worker_ids[static_cast<size_t>(w)];
    if (!ids.empty()) {
      const Route& route = routes_.solve(ids, rng_seed);
      bd.t_ow = travel_time(route.d_ow, instance_.speed());
      bd.t_tra = travel_time(route.d_tra, instance_.speed());
      bd.t_ret = travel_time(route.d_ret, instance_.speed());
      for (int pid : ids) {
        bd.t_int += instance_.point(pid).t_in;
        bd.t_ext += instance_.point(pid).t_ex;
      }
      bd.total = bd.t_ow + bd.t_int + bd.t_tra + bd.t_ext + bd.t_ret;
    }
    max_t = std::max(max_t, bd.total);
    min_t = std::min(min_t, bd.total);
    ev.total_time += bd.total;
  }
  ev.fitness = max_t - min_t;
  return ev;
}

Evaluation Evaluator::evaluate_circles(const CircleSolution& sol, uint64_t rng_seed) {
  return evaluate(decode_circles(instance_, sol).assignment, rng_seed);
}

Evaluation evaluate(const Instance& instance, const IntegerSolution& sol, uint64_t rng_seed) {
  Evaluator ev(instance);
  return ev.evaluate(sol, rng_seed);
}

Evaluation evaluate_circles(const Instance& instance, const CircleSolution& sol,
                            uint64_t rng_seed) {
  Evaluator ev(instance);
  return ev.evaluate_circles(sol, rng_seed);
}

double fitness_of_totals(const std::vector<double>& totals) {
  if (totals.empty()) throw std::invalid_argument("fitness_of_totals: empty");
  const auto [mn, mx] = std::minmax_element(totals.begin(), totals.end());
  return *mx - *mn;
}

}  // namespace lastmile
