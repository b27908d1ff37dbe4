#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubespec {

struct MalformedGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Disconnected : std::runtime_error {
  Disconnected() : std::runtime_error("graph is not connected") {}
};

// A vertex triple with no unique median, returned as evidence of failure.
struct MedianWitness {
  int u, v, x;
  int median_count;  // number of common geodesic vertices found (!= 1)
};

struct NotMedian : std::runtime_error {
  MedianWitness witness;
  explicit NotMedian(MedianWitness w)
      : std::runtime_error("graph is not a median graph (triple " +
                           std::to_string(w.u) + "," + std::to_string(w.v) +
                           "," + std::to_string(w.x) + " has " +
                           std::to_string(w.median_count) + " medians)"),
        witness(w) {}
};

// 1-skeleton of a cube complex plus the base vertex P.
// Edges are normalized to (u < v) and sorted; edge ids are positions in
// that order, which fixes all downstream ids deterministically.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  int base = 0;

  int degree(int v) const;
  std::vector<std::vector<int>> adjacency() const;

  // Throws MalformedGraph / Disconnected on invariant violations and
  // normalizes the edge list.
  void validate_and_normalize();
};

// BFS distances from a single source.
std::vector<int> bfs_distances(const Graph& g, int source);

// All-pairs BFS distance matrix.  The parallel variant must agree with the
// serial one exactly; both are kept (see kernels.cpp).
std::vector<std::vector<int>> all_pairs_distances_serial(const Graph& g);
std::vector<std::vector<int>> all_pairs_distances_omp(const Graph& g);

// Median-graph check: every triple (u,v,x) must admit exactly one vertex on
// pairwise geodesics.  Returns a witness triple on failure.
std::optional<MedianWitness> median_witness_serial(
    const Graph& g, const std::vector<std::vector<int>>& dist);
std::optional<MedianWitness> median_witness_omp(
    const Graph& g, const std::vector<std::vector<int>>& dist);

std::optional<MedianWitness> validate_median(const Graph& g);

// Generators for the test families.
Graph make_path(int edges);
Graph make_grid(int nx, int ny);
Graph make_hypercube(int dim);
Graph make_balanced_binary_tree(int depth);
// Box product; base = pair of bases.
Graph make_product(const Graph& a, const Graph& b);

}  // namespace cubespec
