#include "cubespec/complex.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>

namespace cubespec {

int max_cube_cap() {
  if (const char* env = std::getenv("CUBESPEC_MAX_CUBES")) {
    int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return 200000;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CubeComplex CubeComplex::build(Graph graph, int max_dim) {
  graph.validate_and_normalize();
  if (auto w = validate_median(graph)) throw NotMedian(*w);

  CubeComplex X;
  X.graph_ = std::move(graph);
  const Graph& g = X.graph_;
  const int n = g.vertex_count;
  const int m = static_cast<int>(g.edges.size());
  auto adj = g.adjacency();

  // Edge lookup: (u,v) with u < v -> edge index.
  std::map<std::pair<int, int>, int> edge_index;
  for (int e = 0; e < m; ++e) edge_index[g.edges[e]] = e;
  auto find_edge = [&](int u, int v) -> int {
    if (u > v) std::swap(u, v);
    auto it = edge_index.find({u, v});
    return it == edge_index.end() ? -1 : it->second;
  };

  // Hyperplanes: transitive closure of "opposite edges of a 4-cycle".
  UnionFind uf(m);
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      for (int w : adj[u]) {
        if (v >= w) continue;
        // Common neighbor x of v and w closing the square u-v-x-w.
        for (int x : adj[v]) {
          if (x == u) continue;
          int e_wx = find_edge(w, x);
          if (e_wx < 0) continue;
          uf.unite(find_edge(u, v), e_wx);
          uf.unite(find_edge(u, w), find_edge(v, x));
        }
      }

  // Hyperplane ids ordered by smallest dual edge index.
  std::map<int, std::vector<int>> classes;
  for (int e = 0; e < m; ++e) classes[uf.find(e)].push_back(e);
  std::vector<std::vector<int>> class_list;
  for (auto& [root, es] : classes) class_list.push_back(es);
  std::sort(class_list.begin(), class_list.end());

  X.edge_hyperplane_.assign(m, -1);
  for (size_t h = 0; h < class_list.size(); ++h) {
    Hyperplane hp;
    hp.id = static_cast<int>(h);
    hp.dual_edges = class_list[h];
    for (int e : hp.dual_edges) X.edge_hyperplane_[e] = hp.id;

    // Sides: components after deleting the dual edges.  Exactly two, and
    // every dual edge must cross them.
    std::vector<char> in_class(m, 0);
    for (int e : hp.dual_edges) in_class[e] = 1;
    hp.side_of.assign(n, -1);
    int components = 0;
    for (int start = 0; start < n; ++start) {
      if (hp.side_of[start] >= 0) continue;
      if (components >= 2)
        throw MalformedGraph("hyperplane " + std::to_string(h) +
                             " does not separate into two components");
      std::queue<int> q;
      hp.side_of[start] = static_cast<char>(components);
      q.push(start);
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[v]) {
          int e = find_edge(v, u);
          if (in_class[e] || hp.side_of[u] >= 0) continue;
          hp.side_of[u] = hp.side_of[v];
          q.push(u);
        }
      }
      ++components;
    }
    if (components != 2)
      throw MalformedGraph("hyperplane " + std::to_string(h) +
                           " separates into " + std::to_string(components) +
                           " components");
    for (int e : hp.dual_edges)
      if (hp.side_of[g.edges[e].first] == hp.side_of[g.edges[e].second])
        throw MalformedGraph("dual edge does not cross its hyperplane");
    X.hyperplanes_.push_back(std::move(hp));
  }

  // Cubes by increasing dimension.  A (q+1)-cube is a q-cube C together
  // with its translate across a hyperplane not cutting C, joined by a
  // full matching of dual edges.
  const int cap = max_cube_cap();
  std::vector<std::vector<int>> by_dim;  // cube ids per dimension (temporary)
  std::set<std::vector<int>> seen;
  struct ProtoCube {
    std::vector<int> vertices;
    std::vector<int> mid;
  };
  std::vector<ProtoCube> protos;

  for (int v = 0; v < n; ++v) {
    protos.push_back({{v}, {}});
    seen.insert({v});
  }
  by_dim.push_back({});
  for (int v = 0; v < n; ++v) by_dim[0].push_back(v);

  for (int q = 0; q + 1 <= max_dim; ++q) {
    if (q >= static_cast<int>(by_dim.size())) break;
    std::vector<int> next;
    for (int cid : by_dim[q]) {
      const ProtoCube c = protos[cid];  // copy: push_back below may reallocate
      // Candidate hyperplanes from edges at the lowest vertex.
      int u0 = c.vertices.front();
      for (int nbr : adj[u0]) {
        int h = X.edge_hyperplane_[find_edge(u0, nbr)];
        if (std::binary_search(c.mid.begin(), c.mid.end(), h)) continue;
        // Translate every vertex of C across h.
        std::vector<int> shifted;
        shifted.reserve(c.vertices.size());
        bool ok = true;
        for (int v : c.vertices) {
          int image = -1;
          for (int w : adj[v])
            if (X.edge_hyperplane_[find_edge(v, w)] == h) {
              image = w;
              break;
            }
          if (image < 0) {
            ok = false;
            break;
          }
          shifted.push_back(image);
        }
        if (!ok) continue;
        std::sort(shifted.begin(), shifted.end());
        if (!seen.count(shifted)) continue;  // translate must itself be a cube
        std::vector<int> all(c.vertices);
        all.insert(all.end(), shifted.begin(), shifted.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        if (static_cast<int>(all.size()) != (2 << q)) continue;
        if (seen.count(all)) continue;
        seen.insert(all);
        ProtoCube bigger;
        bigger.vertices = std::move(all);
        bigger.mid = c.mid;
        bigger.mid.insert(std::lower_bound(bigger.mid.begin(), bigger.mid.end(), h), h);
        if (static_cast<int>(protos.size()) >= cap)
          throw SizeOverflow("cube count exceeds cap of " + std::to_string(cap));
        protos.push_back(std::move(bigger));
        next.push_back(static_cast<int>(protos.size()) - 1);
      }
    }
    if (next.empty()) break;
    by_dim.push_back(std::move(next));
  }

  // Final deterministic ids: sort by (dim, vertex list).
  std::vector<int> order(protos.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (protos[a].mid.size() != protos[b].mid.size())
      return protos[a].mid.size() < protos[b].mid.size();
    return protos[a].vertices < protos[b].vertices;
  });
  for (int idx : order) {
    Cube cube;
    cube.id = static_cast<int>(X.cubes_.size());
    cube.vertices = protos[idx].vertices;
    cube.mid = protos[idx].mid;
    cube.dim = static_cast<int>(cube.mid.size());
    X.dimension_ = std::max(X.dimension_, cube.dim);
    X.cube_index_[cube.vertices] = cube.id;
    X.cubes_.push_back(std::move(cube));
  }

  X.derive_base_data();
  return X;
}

void CubeComplex::derive_base_data() {
  const int n = graph_.vertex_count;
  base_dist_ = bfs_distances(graph_, graph_.base);

  // Far corners: the unique vertex separated from P by every cutting
  // hyperplane.
  for (Cube& c : cubes_) {
    c.far_corner = -1;
    for (int v : c.vertices) {
      bool all_far = true;
      for (int h : c.mid)
        if (!far_side(h, v)) {
          all_far = false;
          break;
        }
      if (all_far) {
        assert(c.far_corner < 0 && "far corner must be unique");
        c.far_corner = v;
      }
    }
    assert(c.far_corner >= 0);
  }

  // SAH and cofaces: for each cube D and each H cutting D, the face of D
  // on the far side of H has H adjacent and separating; D is its coface.
  sah_.assign(cubes_.size(), {});
  coface_.assign(cubes_.size(), {});
  for (const Cube& d : cubes_) {
    for (int h : d.mid) {
      std::vector<int> face;
      for (int v : d.vertices)
        if (far_side(h, v)) face.push_back(v);
      int cid = find_cube(face);
      assert(cid >= 0 && "faces are closed under construction");
      sah_[cid].push_back(h);
      coface_[cid].emplace_back(h, d.id);
    }
  }
  for (auto& s : sah_) std::sort(s.begin(), s.end());
  for (auto& c : coface_) std::sort(c.begin(), c.end());

  block_.assign(n, {});
  for (const Cube& c : cubes_) block_[c.far_corner].push_back(c.id);
}

int CubeComplex::find_cube(const std::vector<int>& sorted_vertices) const {
  auto it = cube_index_.find(sorted_vertices);
  return it == cube_index_.end() ? -1 : it->second;
}

bool CubeComplex::separates(int hyperplane_id, int u, int v) const {
  const Hyperplane& h = hyperplanes_.at(hyperplane_id);
  return h.side_of.at(u) != h.side_of.at(v);
}

bool CubeComplex::far_side(int hyperplane_id, int v) const {
  return separates(hyperplane_id, v, graph_.base);
}

int CubeComplex::distance(int u, int v) const {
  int count = 0;
  for (const Hyperplane& h : hyperplanes_)
    if (h.side_of[u] != h.side_of[v]) ++count;
  return count;
}

int CubeComplex::coface(int cube_id, int hyperplane_id) const {
  for (const auto& [h, d] : coface_.at(cube_id))
    if (h == hyperplane_id) return d;
  throw NotAdjacent("hyperplane " + std::to_string(hyperplane_id) +
                    " is not in sah(" + std::to_string(cube_id) + ")");
}

int CubeComplex::first_cube(int vertex) const {
  const auto& s = sah_.at(vertex);
  // The cube spanned at Q by the edges dual to sah(Q): walk up one
  // hyperplane at a time.
  int cid = vertex;
  for (int h : s) cid = coface(cid, h);
  // cid now has mid = sah(Q); if the intermediate sah sets were not
  // nested the input was not CAT(0) and coface() would have thrown.
  return cid;
}

std::vector<int> CubeComplex::normal_cube_path(int vertex) const {
  std::vector<int> path;
  int q = vertex;
  while (q != graph_.base) {
    int d = first_cube(q);
    path.push_back(d);
    // Move to the corner diagonally opposite q: the vertex on the near
    // side of every hyperplane cutting d.
    const Cube& cube = cubes_[d];
    int next = -1;
    for (int v : cube.vertices) {
      bool all_near = true;
      for (int h : cube.mid)
        if (far_side(h, v)) {
          all_near = false;
          break;
        }
      if (all_near) {
        next = v;
        break;
      }
    }
    assert(next >= 0 && next != q);
    q = next;
  }
  return path;
}

CubeComplex CubeComplex::rebase(int new_base) const {
  CubeComplex X;
  X.graph_ = graph_;
  X.graph_.base = new_base;
  X.dimension_ = dimension_;
  X.cubes_ = cubes_;
  X.hyperplanes_ = hyperplanes_;
  X.edge_hyperplane_ = edge_hyperplane_;
  X.cube_index_ = cube_index_;
  X.derive_base_data();
  return X;
}

}  // namespace cubespec
