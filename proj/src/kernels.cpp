// Data-parallel inner loops with serial references.  The OpenMP variants
// must produce bit-identical results; tests/test_kernels.cpp checks this
// and tools/bench.cpp times both.

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cubespec/graph.hpp"

namespace cubespec {

std::vector<std::vector<int>> all_pairs_distances_serial(const Graph& g) {
  std::vector<std::vector<int>> dist(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) dist[v] = bfs_distances(g, v);
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances_omp(const Graph& g) {
  std::vector<std::vector<int>> dist(g.vertex_count);
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < g.vertex_count; ++v) dist[v] = bfs_distances(g, v);
  return dist;
}

namespace {

// Geodesic intervals I(u,v) as bitsets over vertices, packed row-major
// by (u,v) pair.
struct Intervals {
  int n = 0;
  int words = 0;
  std::vector<uint64_t> bits;

  const uint64_t* row(int u, int v) const {
    return bits.data() + (static_cast<size_t>(u) * n + v) * words;
  }
};

Intervals build_intervals(const std::vector<std::vector<int>>& dist, bool parallel) {
  Intervals iv;
  iv.n = static_cast<int>(dist.size());
  iv.words = (iv.n + 63) / 64;
  iv.bits.assign(static_cast<size_t>(iv.n) * iv.n * iv.words, 0);
#pragma omp parallel for schedule(static) if (parallel)
  for (int u = 0; u < iv.n; ++u)
    for (int v = 0; v < iv.n; ++v) {
      uint64_t* row = iv.bits.data() + (static_cast<size_t>(u) * iv.n + v) * iv.words;
      for (int m = 0; m < iv.n; ++m)
        if (dist[u][m] + dist[m][v] == dist[u][v]) row[m / 64] |= uint64_t{1} << (m % 64);
    }
  return iv;
}

int median_count(const Intervals& iv, int u, int v, int x) {
  const uint64_t* a = iv.row(u, v);
  const uint64_t* b = iv.row(v, x);
  const uint64_t* c = iv.row(u, x);
  int count = 0;
  for (int w = 0; w < iv.words; ++w) count += __builtin_popcountll(a[w] & b[w] & c[w]);
  return count;
}

// First bad triple (v,x) for a fixed u, in lexicographic order.
std::optional<MedianWitness> first_witness_for(const Intervals& iv, int u) {
  for (int v = u; v < iv.n; ++v)
    for (int x = v; x < iv.n; ++x) {
      int count = median_count(iv, u, v, x);
      if (count != 1) return MedianWitness{u, v, x, count};
    }
  return std::nullopt;
}

}  // namespace

std::optional<MedianWitness> median_witness_serial(
    const Graph& g, const std::vector<std::vector<int>>& dist) {
  Intervals iv = build_intervals(dist, false);
  for (int u = 0; u < g.vertex_count; ++u)
    if (auto w = first_witness_for(iv, u)) return w;
  return std::nullopt;
}

std::optional<MedianWitness> median_witness_omp(
    const Graph& g, const std::vector<std::vector<int>>& dist) {
  const int n = g.vertex_count;
  Intervals iv = build_intervals(dist, true);
  // Deterministic result: the lexicographically first witness, same as
  // the serial reference.
  std::optional<MedianWitness> best;
#pragma omp parallel for schedule(dynamic)
  for (int u = 0; u < n; ++u) {
    auto w = first_witness_for(iv, u);
    if (w) {
#pragma omp critical
      if (!best || w->u < best->u) best = w;
    }
  }
  return best;
}

}  // namespace cubespec
