#include "cubespec/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace cubespec {

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

void Graph::validate_and_normalize() {
  if (vertex_count < 0) throw MalformedGraph("negative vertex count");
  if (base < 0 || base >= vertex_count)
    throw MalformedGraph("base vertex out of range");
  for (auto& [a, b] : edges) {
    if (a == b) throw MalformedGraph("self-loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
      throw MalformedGraph("edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw MalformedGraph("duplicate edge");
  if (vertex_count > 0) {
    auto dist = bfs_distances(*this, base);
    for (int v = 0; v < vertex_count; ++v)
      if (dist[v] < 0) throw Disconnected();
  }
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count, -1);
  auto adj = g.adjacency();
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
  }
  return dist;
}

std::optional<MedianWitness> validate_median(const Graph& g) {
  auto dist = all_pairs_distances_omp(g);
  return median_witness_omp(g, dist);
}

Graph make_path(int edges) {
  Graph g;
  g.vertex_count = edges + 1;
  for (int i = 0; i < edges; ++i) g.edges.emplace_back(i, i + 1);
  g.base = 0;
  g.validate_and_normalize();
  return g;
}

Graph make_grid(int nx, int ny) {
  Graph g;
  g.vertex_count = nx * ny;
  auto id = [nx](int x, int y) { return y * nx + x; };
  for (int y = 0; y < ny; ++y)
    for (int x = 0; x < nx; ++x) {
      if (x + 1 < nx) g.edges.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < ny) g.edges.emplace_back(id(x, y), id(x, y + 1));
    }
  g.base = 0;
  g.validate_and_normalize();
  return g;
}

Graph make_hypercube(int dim) {
  Graph g;
  g.vertex_count = 1 << dim;
  for (int v = 0; v < g.vertex_count; ++v)
    for (int bit = 0; bit < dim; ++bit)
      if (!(v & (1 << bit))) g.edges.emplace_back(v, v | (1 << bit));
  g.base = 0;
  g.validate_and_normalize();
  return g;
}

Graph make_balanced_binary_tree(int depth) {
  Graph g;
  g.vertex_count = (1 << (depth + 1)) - 1;
  for (int v = 1; v < g.vertex_count; ++v) g.edges.emplace_back((v - 1) / 2, v);
  g.base = 0;
  g.validate_and_normalize();
  return g;
}

Graph make_product(const Graph& a, const Graph& b) {
  Graph g;
  g.vertex_count = a.vertex_count * b.vertex_count;
  auto id = [&](int va, int vb) { return va * b.vertex_count + vb; };
  for (int va = 0; va < a.vertex_count; ++va)
    for (const auto& [u, v] : b.edges) g.edges.emplace_back(id(va, u), id(va, v));
  for (int vb = 0; vb < b.vertex_count; ++vb)
    for (const auto& [u, v] : a.edges) g.edges.emplace_back(id(u, vb), id(v, vb));
  g.base = id(a.base, b.base);
  g.validate_and_normalize();
  return g;
}

}  // namespace cubespec
