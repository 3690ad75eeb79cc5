#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "lastmile/routing.hpp"

using namespace lastmile;

namespace {

// Independent exact-TSP oracle: enumerate every visit order of the closed
// depot tour. Test-side only.
double brute_force_tour(const Point2& depot, const std::vector<Point2>& pts) {
  std::vector<size_t> perm(pts.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double len = euclidean_distance(depot, pts[perm.front()]);
    for (size_t i = 0; i + 1 < perm.size(); ++i) {
      len += euclidean_distance(pts[perm[i]], pts[perm[i + 1]]);
    }
    len += euclidean_distance(pts[perm.back()], depot);
    best = std::min(best, len);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Nearest-neighbor-only construction length, for the monotonicity guard.
double nn_length(const Point2& depot, const std::vector<Point2>& pts) {
  std::vector<bool> used(pts.size(), false);
  Point2 current = depot;
  double len = 0.0;
  for (size_t step = 0; step < pts.size(); ++step) {
    size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < pts.size(); ++i) {
      if (used[i]) continue;
      const double d = euclidean_distance(current, pts[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    used[best] = true;
    len += best_d;
    current = pts[best];
  }
  return len + euclidean_distance(current, depot);
}

std::vector<Point2> positions(const Instance& inst) {
  std::vector<Point2> out;
  for (const auto& p : inst.points()) out.push_back(p.pos());
  return out;
}

}  // namespace

TEST_CASE("solve_route rectangle perimeter") {
  const auto inst = testing::make_instance({0, 0}, {{100, 0}, {100, 100}, {0, 100}}, 1);
  const Route r = solve_route({0, 0}, inst, {0, 1, 2});
  CHECK(r.length() == doctest::Approx(400.0));
  CHECK(r.d_ow == doctest::Approx(100.0));
  CHECK(r.d_tra == doctest::Approx(200.0));
  CHECK(r.d_ret == doctest::Approx(100.0));
}

TEST_CASE("solve_route single point out-and-back") {
  const auto inst = testing::make_instance({0, 0}, {{30, 40}}, 1);
  const Route r = solve_route({0, 0}, inst, {0});
  CHECK(r.d_ow == doctest::Approx(50.0));
  CHECK(r.d_tra == doctest::Approx(0.0));
  CHECK(r.d_ret == doctest::Approx(50.0));
  CHECK(r.order == std::vector<int>{0});
}

TEST_CASE("solve_route rejects empty point set") {
  const auto inst = testing::make_instance({0, 0}, {{1, 1}}, 1);
  CHECK_THROWS_AS(solve_route({0, 0}, inst, {}), std::invalid_argument);
}

TEST_CASE("solve_route matches exact optimum on 7 random points, seed 17") {
  const auto inst = testing::random_instance(17, 7, 1);
  std::vector<int> ids(7);
  std::iota(ids.begin(), ids.end(), 0);
  const Route r = solve_route(inst.depot(), inst, ids, 17);
  const double exact = brute_force_tour(inst.depot(), positions(inst));
  CHECK(r.length() == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("two_opt_improve removes a crossing") {
  std::vector<Point2> tour = {{0, 0}, {10, 10}, {10, 0}, {0, 10}};
  const double before = tour_length(tour);
  CHECK(two_opt_improve(tour));
  CHECK(tour_length(tour) < before);
}

TEST_CASE("two_opt_improve is a fixpoint on an optimal convex tour") {
  std::vector<Point2> tour = {{0, 0}, {10, 0}, {10, 10}, {0, 10}};
  CHECK_FALSE(two_opt_improve(tour));
  const std::vector<Point2> expected = {{0, 0}, {10, 0}, {10, 10}, {0, 10}};
  REQUIRE(tour.size() == expected.size());
  for (size_t i = 0; i < tour.size(); ++i) {
    CHECK(tour[i].x == expected[i].x);
    CHECK(tour[i].y == expected[i].y);
  }
}

TEST_CASE("two_opt applied twice yields no further change") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coord(0, 100);
  std::vector<Point2> tour;
  for (int i = 0; i < 9; ++i) tour.push_back({coord(rng), coord(rng)});
  two_opt_improve(tour);
  CHECK_FALSE(two_opt_improve(tour));
}

TEST_CASE("tour ordering chain: 2-opt <= nearest-neighbor") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const auto inst = testing::random_instance(seed, n, 1);
    std::vector<int> ids(static_cast<size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    const Route r = solve_route(inst.depot(), inst, ids, seed);
    CHECK(r.length() <= nn_length(inst.depot(), positions(inst)) + 1e-9);
  }
}

TEST_CASE("near-optimality guard on small instances") {
  int ok = 0;
  const int trials = 200;
  for (uint64_t seed = 0; seed < trials; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);  // 4..8 points
    const auto inst = testing::random_instance(1000 + seed, n, 1);
    std::vector<int> ids(static_cast<size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    const Route r = solve_route(inst.depot(), inst, ids, seed);
    const double exact = brute_force_tour(inst.depot(), positions(inst));
    CHECK(r.length() >= exact - 1e-9);
    if (r.length() <= 1.05 * exact) ++ok;
  }
  CHECK(ok >= 190);  // >= 95%
}

TEST_CASE("solve_route determinism and permutation validity") {
  const auto inst = testing::random_instance(42, 12, 1);
  std::vector<int> ids = {2, 5, 7, 9, 0, 11};
  const Route a = solve_route(inst.depot(), inst, ids, 5);
  const Route b = solve_route(inst.depot(), inst, ids, 5);
  CHECK(a.order == b.order);
  CHECK(a.length() == doctest::Approx(b.length()));

  auto sorted = a.order;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 2, 5, 7, 9, 11});
}

TEST_CASE("RouteSolver caches by id-set") {
  const auto inst = testing::random_instance(7, 10, 1);
  RouteSolver solver(inst);
  const Route& a = solver.solve({3, 1, 4});
  CHECK(solver.cache_size() == 1);
  const Route& b = solver.solve({4, 3, 1});  // same set, different order
  CHECK(solver.cache_size() == 1);
  CHECK(&a == &b);
  solver.solve({1, 2});
  CHECK(solver.cache_size() == 2);
}
