#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubespec/graph.hpp"

namespace cubespec {

struct SizeOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAdjacent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Class of parallel edges; separates the vertex set into two sides.
// side_of[v] is 0 or 1; which side is "near" depends on the base vertex
// and is resolved by CubeComplex.
struct Hyperplane {
  int id = -1;
  std::vector<int> dual_edges;   // edge indices, ascending
  std::vector<char> side_of;     // per-vertex side bit
};

struct Cube {
  int id = -1;
  std::vector<int> vertices;     // sorted, size 2^dim
  int dim = 0;
  std::vector<int> mid;          // hyperplane ids cutting the cube, ascending
  int far_corner = -1;           // unique vertex separated from P by all of mid
};

// Finite CAT(0) cube complex derived from a validated median graph.
// Immutable after build(); queries are pure.
class CubeComplex {
 public:
  // Derives cubes, hyperplanes, separation data and block structure.
  // Throws NotMedian / Disconnected / MalformedGraph / SizeOverflow.
  static CubeComplex build(Graph graph, int max_dim = 6);

  const Graph& graph() const { return graph_; }
  int base() const { return graph_.base; }
  int vertex_count() const { return graph_.vertex_count; }
  int cube_count() const { return static_cast<int>(cubes_.size()); }
  int hyperplane_count() const { return static_cast<int>(hyperplanes_.size()); }
  int dimension() const { return dimension_; }

  const std::vector<Cube>& cubes() const { return cubes_; }
  const Cube& cube(int id) const { return cubes_.at(id); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& hyperplane(int id) const { return hyperplanes_.at(id); }

  int edge_hyperplane(int edge_index) const { return edge_hyperplane_.at(edge_index); }
  // Cube id of the 0-cube at a vertex (== the vertex id by construction).
  int vertex_cube(int v) const { return v; }
  // Cube id for a sorted vertex list, or -1.
  int find_cube(const std::vector<int>& sorted_vertices) const;

  bool separates(int hyperplane_id, int u, int v) const;
  // True iff H separates v from the base vertex.
  bool far_side(int hyperplane_id, int v) const;
  // Number of separating hyperplanes; equals the BFS distance.
  int distance(int u, int v) const;

  const std::vector<int>& mid(int cube_id) const { return cubes_.at(cube_id).mid; }
  const std::vector<int>& sah(int cube_id) const { return sah_.at(cube_id); }
  int far_corner(int cube_id) const { return cubes_.at(cube_id).far_corner; }

  // The unique (dim+1)-cube containing C as a codim-1 face and cut by H.
  // Throws NotAdjacent unless H is in sah(C).
  int coface(int cube_id, int hyperplane_id) const;

  // Cube at Q spanned by the edges dual to sah(Q).
  int first_cube(int vertex) const;
  std::vector<int> normal_cube_path(int vertex) const;

  // All cubes containing Q whose cutting hyperplanes all separate Q from P.
  const std::vector<int>& block(int vertex) const { return block_.at(vertex); }

  // Same cubes and hyperplanes, rebased at a new vertex; all ids preserved.
  CubeComplex rebase(int new_base) const;

  // BFS distance from the base vertex (precomputed).
  int base_distance(int v) const { return base_dist_.at(v); }

 private:
  void derive_base_data();

  Graph graph_;
  int dimension_ = 0;
  std::vector<Cube> cubes_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<int> edge_hyperplane_;
  std::map<std::vector<int>, int> cube_index_;
  std::vector<std::vector<int>> sah_;
  std::vector<std::vector<std::pair<int, int>>> coface_;  // (H, coface id)
  std::vector<std::vector<int>> block_;
  std::vector<int> base_dist_;
};

// Environment override for the cube-count cap (CUBESPEC_MAX_CUBES).
int max_cube_cap();

}  // namespace cubespec
