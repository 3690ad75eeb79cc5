#pragma once

#include <cstdint>
#include <vector>

#include "lastmile/model.hpp"

namespace lastmile {

struct ClusterResult {
  std::vector<int> labels;       // cluster index per point
  std::vector<Point2> centroids; // member means in the original plane
};

// Lloyd's algorithm. Initial centroids are k distinct points sampled
// uniformly at random; stops when labels no longer change or max_iters.
// Empty clusters are re-seeded with the point farthest from its centroid.
ClusterResult kmeans(const std::vector<Point2>& points, int k, uint64_t rng_seed,
                     int max_iters = 300);

// Generic-dimension Lloyd over row vectors; same contract as kmeans.
std::vector<int> kmeans_rows(const std::vector<std::vector<double>>& rows, int k,
                             uint64_t rng_seed, int max_iters = 300);

// Deterministic spectral embedding: Gaussian kernel with bandwidth = median
// pairwise distance on a symmetrized m-nearest-neighbor graph, symmetric
// normalized Laplacian, k smallest eigenvectors, row-normalized.
std::vector<std::vector<double>> spectral_embedding(const std::vector<Point2>& points,
                                                    int k);

// spectral_embedding followed by k-means in the embedded space; reported
// centroids are the member means of the original coordinates.
ClusterResult spectral_cluster(const std::vector<Point2>& points, int k,
                               uint64_t rng_seed);

// k-means on a precomputed embedding (lets callers reuse the eigensolve
// across seeds).
ClusterResult cluster_from_embedding(const std::vector<Point2>& points,
                                     const std::vector<std::vector<double>>& embedding,
                                     int k, uint64_t rng_seed);

}  // namespace lastmile
