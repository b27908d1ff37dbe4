#include <doctest.h>

#include <algorithm>

#include "cubespec/action.hpp"
#include "cubespec/weights.hpp"
#include "suite_complexes.hpp"

using namespace cubespec;

namespace {

Graph square_graph() {
  Graph g;
  g.vertex_count = 4;
  g.edges = {{0, 1}, {1, 3}, {2, 3}, {0, 2}};
  g.base = 0;
  return g;
}

}  // namespace

TEST_CASE("distance weight on the path") {
  auto X = CubeComplex::build(make_path(2));
  auto w = distance_weight(X);
  CHECK(w.at(X.edge_hyperplane(0)) == Rational(1, 2));
  CHECK(w.at(X.edge_hyperplane(1)) == Rational(3, 2));
}

TEST_CASE("distance weight on the square and grid") {
  auto S = CubeComplex::build(square_graph());
  auto ws = distance_weight(S);
  for (int h = 0; h < S.hyperplane_count(); ++h) CHECK(ws.at(h) == Rational(1, 2));

  auto G = CubeComplex::build(make_grid(3, 3));
  auto wg = distance_weight(G);
  std::vector<Rational> vals(wg.values());
  std::sort(vals.begin(), vals.end());
  CHECK(vals == std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(3, 2),
                                      Rational(3, 2)});
}

TEST_CASE("distance weights are positive half-integers") {
  for (const auto& [name, X] : cubespec::testing::suite_complexes()) {
    CAPTURE(name);
    auto w = distance_weight(X);
    for (int h = 0; h < w.size(); ++h) {
      CHECK(w.at(h) > 0);
      CHECK(numerator(w.at(h)) % 2 == 1);
      CHECK(denominator(w.at(h)) == 2);
    }
  }
}

TEST_CASE("properness profile") {
  auto X = CubeComplex::build(make_path(2));
  auto w = distance_weight(X);
  CHECK(properness_profile(w, 0.25) == 0);
  CHECK(properness_profile(w, 1.0) == 1);
  CHECK(properness_profile(w, 2.0) == 2);
}

TEST_CASE("adaptedness gap") {
  auto S = CubeComplex::build(square_graph());
  auto ws = distance_weight(S);
  auto autos = enumerate_automorphisms(S);
  for (const auto& g : autos) CHECK(adaptedness_gap(S, ws, g) == 0.0);

  // Path end-swap: weights 0.5 and 1.5 trade places.
  auto P = CubeComplex::build(make_path(2));
  auto wp = distance_weight(P);
  auto swap = validate_automorphism(P, {2, 1, 0});
  CHECK(adaptedness_gap(P, wp, swap) == doctest::Approx(1.0));

  auto id = validate_automorphism(P, {0, 1, 2});
  CHECK(adaptedness_gap(P, wp, id) == 0.0);
}

TEST_CASE("distance weight is automorphism covariant") {
  for (const auto& [name, X] : cubespec::testing::suite_complexes()) {
    if (X.vertex_count() > 10) continue;
    CAPTURE(name);
    auto w = distance_weight(X);
    for (const auto& g : enumerate_automorphisms(X)) {
      auto Xg = X.rebase(g.vertex_map[X.base()]);
      auto wg = distance_weight(Xg);
      for (int h = 0; h < X.hyperplane_count(); ++h)
        CHECK(wg.at(g.hyperplane_map[h]) == w.at(h));
    }
  }
}

TEST_CASE("zero or negative weights are rejected") {
  auto X = CubeComplex::build(make_path(2));
  CHECK_THROWS_AS(WeightFn::explicit_values(X, {0.0, 1.0}), InvalidWeight);
  CHECK_THROWS_AS(WeightFn::explicit_values(X, {-1.0, 1.0}), InvalidWeight);
  CHECK_THROWS_AS(WeightFn::explicit_values(X, {1.0}), InvalidWeight);
}
