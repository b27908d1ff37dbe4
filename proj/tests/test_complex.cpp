#include <doctest.h>

#include <algorithm>
#include <set>

#include "cubespec/complex.hpp"
#include "suite_complexes.hpp"

using namespace cubespec;

namespace {

Graph square_graph() {
  // 4-cycle 0-1-3-2-0.
  Graph g;
  g.vertex_count = 4;
  g.edges = {{0, 1}, {1, 3}, {2, 3}, {0, 2}};
  g.base = 0;
  return g;
}

Graph cycle_graph(int n) {
  Graph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  g.base = 0;
  return g;
}

// Independent O(n^4) median oracle, distinct from the bitset kernel.
int naive_median_count(const Graph& g, int u, int v, int x) {
  auto du = bfs_distances(g, u);
  auto dv = bfs_distances(g, v);
  auto dx = bfs_distances(g, x);
  int count = 0;
  for (int m = 0; m < g.vertex_count; ++m)
    if (du[m] + dv[m] == du[v] && dv[m] + dx[m] == dv[x] && du[m] + dx[m] == du[x])
      ++count;
  return count;
}

bool naive_is_median(const Graph& g) {
  for (int u = 0; u < g.vertex_count; ++u)
    for (int v = u; v < g.vertex_count; ++v)
      for (int x = v; x < g.vertex_count; ++x)
        if (naive_median_count(g, u, v, x) != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("path complex: cubes and hyperplanes") {
  auto X = CubeComplex::build(make_path(2));
  CHECK(X.vertex_count() == 3);
  CHECK(X.cube_count() == 5);  // 3 vertices + 2 edges
  CHECK(X.hyperplane_count() == 2);
  for (const Hyperplane& h : X.hyperplanes()) CHECK(h.dual_edges.size() == 1);
}

TEST_CASE("square complex: one 2-cube, two hyperplanes with two dual edges") {
  auto X = CubeComplex::build(square_graph());
  CHECK(X.cube_count() == 9);  // 4 + 4 + 1
  CHECK(X.hyperplane_count() == 2);
  for (const Hyperplane& h : X.hyperplanes()) CHECK(h.dual_edges.size() == 2);
  CHECK(X.dimension() == 2);
}

TEST_CASE("5-cycle is rejected with a witness") {
  CHECK_THROWS_AS(CubeComplex::build(cycle_graph(5)), NotMedian);
  CHECK_FALSE(naive_is_median(cycle_graph(5)));
}

TEST_CASE("K_{2,3} yields a median witness") {
  Graph g;
  g.vertex_count = 5;  // parts {0,1} and {2,3,4}
  g.edges = {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
  g.base = 0;
  g.validate_and_normalize();
  auto w = validate_median(g);
  REQUIRE(w.has_value());
  CHECK(naive_median_count(g, w->u, w->v, w->x) == w->median_count);
  CHECK(w->median_count != 1);
}

TEST_CASE("median validation agrees with the naive oracle") {
  CHECK(naive_is_median(make_hypercube(3)));
  CHECK_FALSE(validate_median(make_hypercube(3)).has_value());
  Graph single;
  single.vertex_count = 1;
  single.base = 0;
  CHECK_FALSE(validate_median(single).has_value());
}

TEST_CASE("separation") {
  auto X = CubeComplex::build(make_path(2));
  int h01 = X.edge_hyperplane(0);  // edge (0,1)
  CHECK(X.separates(h01, 0, 2));
  CHECK_FALSE(X.separates(h01, 1, 2));

  auto S = CubeComplex::build(square_graph());
  const Cube& top = S.cube(S.cube_count() - 1);
  REQUIRE(top.dim == 2);
  CHECK(S.separates(0, 0, top.far_corner));
}

TEST_CASE("distance equals BFS distance on every suite complex") {
  for (const auto& [name, X] : cubespec::testing::suite_complexes()) {
    CAPTURE(name);
    for (int u = 0; u < X.vertex_count(); ++u) {
      auto bfs = bfs_distances(X.graph(), u);
      for (int v = 0; v < X.vertex_count(); ++v) CHECK(X.distance(u, v) == bfs[v]);
    }
  }
}

TEST_CASE("distance examples") {
  auto X = CubeComplex::build(make_path(2));
  CHECK(X.distance(1, 1) == 0);
  CHECK(X.distance(0, 2) == 2);
  auto Q3 = CubeComplex::build(make_hypercube(3));
  CHECK(Q3.distance(0, 7) == 3);
}

TEST_CASE("sah and coface on the path") {
  auto X = CubeComplex::build(make_path(2));
  CHECK(X.sah(X.base()).empty());
  // Vertex 2: only the hyperplane dual to (1,2) is adjacent.
  int h12 = X.edge_hyperplane(1);
  CHECK(X.sah(2) == std::vector<int>{h12});
  // coface(vertex 1, H dual (0,1)) = edge (0,1).
  int h01 = X.edge_hyperplane(0);
  int e01 = X.find_cube({0, 1});
  CHECK(X.coface(1, h01) == e01);
  CHECK_THROWS_AS(X.coface(0, h01), NotAdjacent);
}

TEST_CASE("sah and coface on the square") {
  auto X = CubeComplex::build(square_graph());
  // Far corner 3 sees both hyperplanes.
  CHECK(X.sah(3).size() == 2);
  int top = X.find_cube({0, 1, 2, 3});
  REQUIRE(top >= 0);
  int e13 = X.find_cube({1, 3});
  int h0 = X.edge_hyperplane(0);  // class of (0,1) and (2,3)
  CHECK(X.coface(e13, h0) == top);
  // coface(vertex 3, H) is the edge at 3 dual to H.
  int e23 = X.find_cube({2, 3});
  CHECK(X.coface(3, h0) == e23);
}

TEST_CASE("normal cube paths") {
  auto X = CubeComplex::build(make_path(2));
  CHECK(X.normal_cube_path(X.base()).empty());
  int e01 = X.find_cube({0, 1});
  int e12 = X.find_cube({1, 2});
  CHECK(X.normal_cube_path(2) == std::vector<int>{e12, e01});

  auto S = CubeComplex::build(square_graph());
  int top = S.find_cube({0, 1, 2, 3});
  CHECK(S.normal_cube_path(3) == std::vector<int>{top});
  CHECK(S.first_cube(3) == top);
}

TEST_CASE("blocks partition the cube set") {
  for (const auto& [name, X] : cubespec::testing::suite_complexes()) {
    CAPTURE(name);
    size_t total = 0;
    for (int q = 0; q < X.vertex_count(); ++q) {
      const auto& blk = X.block(q);
      total += blk.size();
      CHECK(blk.size() == (size_t{1} << X.sah(q).size()));
      for (int cid : blk) {
        const Cube& c = X.cube(cid);
        CHECK(std::binary_search(c.vertices.begin(), c.vertices.end(), q));
        // mid(C) subset of sah(Q) and sah(C) = sah(Q) \ mid(C).
        std::vector<int> expected_sah;
        for (int h : X.sah(q))
          if (!std::binary_search(c.mid.begin(), c.mid.end(), h))
            expected_sah.push_back(h);
        CHECK(X.sah(cid) == expected_sah);
        for (int h : c.mid)
          CHECK(std::binary_search(X.sah(q).begin(), X.sah(q).end(), h));
      }
    }
    CHECK(total == static_cast<size_t>(X.cube_count()));
  }
}

TEST_CASE("block examples") {
  auto S = CubeComplex::build(square_graph());
  CHECK(S.block(S.base()) == std::vector<int>{S.base()});
  CHECK(S.block(3).size() == 4);
  auto P = CubeComplex::build(make_path(2));
  CHECK(P.block(1).size() == 2);
}

TEST_CASE("far corner is the unique all-separated vertex") {
  for (const auto& [name, X] : cubespec::testing::suite_complexes()) {
    CAPTURE(name);
    for (const Cube& c : X.cubes()) {
      int count = 0;
      for (int v : c.vertices) {
        bool all = true;
        for (int h : c.mid)
          if (!X.separates(h, v, X.base())) all = false;
        if (all) ++count;
      }
      CHECK(count == 1);
      CHECK(std::binary_search(c.vertices.begin(), c.vertices.end(), c.far_corner));
    }
  }
}

TEST_CASE("hyperplane sides are two components crossed by every dual edge") {
  for (const auto& [name, X] : cubespec::testing::suite_complexes()) {
    CAPTURE(name);
    for (const Hyperplane& h : X.hyperplanes()) {
      std::set<char> sides(h.side_of.begin(), h.side_of.end());
      CHECK(sides.size() == 2);
      for (int e : h.dual_edges) {
        auto [u, v] = X.graph().edges[e];
        CHECK(h.side_of[u] != h.side_of[v]);
      }
    }
    // Every edge dual to exactly one hyperplane.
    for (size_t e = 0; e < X.graph().edges.size(); ++e) {
      int count = 0;
      for (const Hyperplane& h : X.hyperplanes())
        count += std::count(h.dual_edges.begin(), h.dual_edges.end(), static_cast<int>(e));
      CHECK(count == 1);
    }
  }
}

TEST_CASE("generators") {
  auto Q3 = CubeComplex::build(make_hypercube(3));
  CHECK(Q3.vertex_count() == 8);
  CHECK(Q3.graph().edges.size() == 12);
  CHECK(Q3.hyperplane_count() == 3);
  CHECK(Q3.cube_count() == 27);  // 8 + 12 + 6 + 1

  auto G = CubeComplex::build(make_product(make_path(2), make_path(2)));
  CHECK(G.vertex_count() == 9);
  CHECK(G.hyperplane_count() == 4);

  auto T = CubeComplex::build(make_balanced_binary_tree(2));
  CHECK(T.vertex_count() == 7);
  CHECK(T.hyperplane_count() == 6);

  // Product hyperplane count is the sum of the factors' counts.
  auto A = CubeComplex::build(make_balanced_binary_tree(2));
  auto B = CubeComplex::build(make_grid(3, 2));
  auto AB = CubeComplex::build(make_product(make_balanced_binary_tree(2), make_grid(3, 2)));
  CHECK(AB.hyperplane_count() == A.hyperplane_count() + B.hyperplane_count());
}

TEST_CASE("malformed inputs") {
  Graph g;
  g.vertex_count = 2;
  g.edges = {{0, 0}};
  g.base = 0;
  CHECK_THROWS_AS(CubeComplex::build(g), MalformedGraph);

  Graph d;
  d.vertex_count = 3;
  d.edges = {{0, 1}};
  d.base = 0;
  CHECK_THROWS_AS(CubeComplex::build(d), Disconnected);
}

TEST_CASE("cube cap raises SizeOverflow") {
  setenv("CUBESPEC_MAX_CUBES", "20", 1);
  CHECK_THROWS_AS(CubeComplex::build(make_hypercube(4)), SizeOverflow);
  unsetenv("CUBESPEC_MAX_CUBES");
}

TEST_CASE("dimension cap truncates enumeration") {
  auto X = CubeComplex::build(make_hypercube(4), 2);
  CHECK(X.dimension() == 2);
}
