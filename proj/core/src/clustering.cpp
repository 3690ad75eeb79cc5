#include "lastmile/clustering.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace lastmile {

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

std::vector<Point2> member_means(const std::vector<Point2>& points,
                                 const std::vector<int>& labels, int k) {
  std::vector<Point2> centroids(static_cast<size_t>(k));
  std::vector<int> counts(static_cast<size_t>(k), 0);
  for (size_t i = 0; i < points.size(); ++i) {
    auto& c = centroids[static_cast<size_t>(labels[i])];
    c.x += points[i].x;
    c.y += points[i].y;
    ++counts[static_cast<size_t>(labels[i])];
  }
  for (int j = 0; j < k; ++j) {
    if (counts[static_cast<size_t>(j)] > 0) {
      centroids[static_cast<size_t>(j)].x /= counts[static_cast<size_t>(j)];
      centroids[static_cast<size_t>(j)].y /= counts[static_cast<size_t>(j)];
    }
  }
  return centroids;
}

}  // namespace

std::vector<int> kmeans_rows(const std::vector<std::vector<double>>& rows, int k,
                             uint64_t rng_seed, int max_iters) {
  const int n = static_cast<int>(rows.size());
  if (k < 1 || k > n) throw std::invalid_argument("kmeans: k out of range");

  std::mt19937_64 rng(rng_seed);
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<std::vector<double>> centroids;
  centroids.reserve(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) centroids.push_back(rows[static_cast<size_t>(idx[j])]);

  std::vector<int> labels(static_cast<size_t>(n), -1);
  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_d = sq_dist(rows[static_cast<size_t>(i)], centroids[0]);
      for (int j = 1; j < k; ++j) {
        const double d = sq_dist(rows[static_cast<size_t>(i)], centroids[static_cast<size_t>(j)]);
        if (d < best_d) {
          best_d = d;
          best = j;
        }
      }
      if (labels[static_cast<size_t>(i)] != best) {
        labels[static_cast<size_t>(i)] = best;
        changed = true;
      }
    }
    if (!changed) break;

    const size_t dim = rows[0].size();
    std::vector<std::vector<double>> sums(static_cast<size_t>(k),
                                          std::vector<double>(dim, 0.0));
    std::vector<int> counts(static_cast<size_t>(k), 0);
    for (int i = 0; i < n; ++i) {
      const int j = labels[static_cast<size_t>(i)];
      for (size_t d = 0; d < dim; ++d) sums[static_cast<size_t>(j)][d] += rows[static_cast<size_t>(i)][d];
      ++counts[static_cast<size_t>(j)];
    }
    for (int j = 0; j < k; ++j) {
      if (counts[static_cast<size_t>(j)] == 0) {
        // Re-seed with the point farthest from its own centroid.
        int far_i = 0;
        double far_d = -1.0;
        for (int i = 0; i < n; ++i) {
          const double d =
              sq_dist(rows[static_cast<size_t>(i)],
                      centroids[static_cast<size_t>(labels[static_cast<size_t>(i)])]);
          if (d > far_d) {
            far_d = d;
            far_i = i;
          }
        }
        centroids[static_cast<size_t>(j)] = rows[static_cast<size_t>(far_i)];
        labels[static_cast<size_t>(far_i)] = j;
      } else {
        for (size_t d = 0; d < dim; ++d) {
          centroids[static_cast<size_t>(j)][d] =
              sums[static_cast<size_t>(j)][d] / counts[static_cast<size_t>(j)];
        }
      }
    }
  }
  return labels;
}

ClusterResult kmeans(const std::vector<Point2>& points, int k, uint64_t rng_seed,
                     int max_iters) {
  std::vector<std::vector<double>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back({p.x, p.y});
  ClusterResult res;
  res.labels = kmeans_rows(rows, k, rng_seed, max_iters);
  res.centroids = member_means(points, res.labels, k);
  return res;
}

std::vector<std::vector<double>> spectral_embedding(const std::vector<Point2>& points,
                                                    int k) {
  const int n = static_cast<int>(points.size());
  if (k < 1 || k > n) throw std::invalid_argument("spectral_embedding: k out of range");
  if (n == 1) return {{1.0}};

  // Median pairwise distance as kernel bandwidth.
  std::vector<double> dists;
  dists.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      dists.push_back(euclidean_distance(points[static_cast<size_t>(i)],
                                         points[static_cast<size_t>(j)]));
    }
  }
  std::nth_element(dists.begin(), dists.begin() + static_cast<long>(dists.size() / 2),
                   dists.end());
  double sigma = dists[dists.size() / 2];
  if (sigma <= 0.0) sigma = 1.0;  // all points coincident

  const int m = std::min(10, n - 1);
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
  std::vector<std::pair<double, int>> nbr(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      nbr[static_cast<size_t>(j)] = {euclidean_distance(points[static_cast<size_t>(i)],
                                                        points[static_cast<size_t>(j)]),
                                     j};
    }
    nbr[static_cast<size_t>(i)].first = std::numeric_limits<double>::infinity();
    std::partial_sort(nbr.begin(), nbr.begin() + m, nbr.end());
    for (int t = 0; t < m; ++t) {
      const auto [d, j] = nbr[static_cast<size_t>(t)];
      const double w = std::exp(-(d * d) / (2.0 * sigma * sigma));
      W(i, j) = std::max(W(i, j), w);  // symmetrized union adjacency
      W(j, i) = std::max(W(j, i), w);
    }
  }

  // Symmetric normalized Laplacian L = I - D^{-1/2} W D^{-1/2}.
  Eigen::VectorXd deg = W.rowwise().sum();
  Eigen::VectorXd dinv = deg.unaryExpr(
      [](double d) { return d > 0.0 ? 1.0 / std::sqrt(d) : 0.0; });
  Eigen::MatrixXd L =
      Eigen::MatrixXd::Identity(n, n) - dinv.asDiagonal() * W * dinv.asDiagonal();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_embedding: eigensolver failed");
  }
  // Eigenvalues ascend; take the first k eigenvectors and row-normalize.
  std::vector<std::vector<double>> rows(static_cast<size_t>(n),
                                        std::vector<double>(static_cast<size_t>(k)));
  for (int i = 0; i < n; ++i) {
    double norm = 0.0;
    for (int j = 0; j < k; ++j) norm += solver.eigenvectors()(i, j) * solver.eigenvectors()(i, j);
    norm = std::sqrt(norm);
    for (int j = 0; j < k; ++j) {
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          norm > 0.0 ? solver.eigenvectors()(i, j) / norm : 0.0;
    }
  }
  return rows;
}

ClusterResult cluster_from_embedding(const std::vector<Point2>& points,
                                     const std::vector<std::vector<double>>& embedding,
                                     int k, uint64_t rng_seed) {
  ClusterResult res;
  res.labels = kmeans_rows(embedding, k, rng_seed);
  res.centroids = member_means(points, res.labels, k);
  return res;
}

ClusterResult spectral_cluster(const std::vector<Point2>& points, int k,
                               uint64_t rng_seed) {
  return cluster_from_embedding(points, spectral_embedding(points, k), k, rng_seed);
}

}  // namespace lastmile
