#include "cubespec/weights.hpp"

#include <algorithm>
#include <cmath>

#include "cubespec/action.hpp"

namespace cubespec {

WeightFn::WeightFn(std::vector<Rational> values) : values_(std::move(values)) {
  dvalues_.reserve(values_.size());
  for (const Rational& v : values_) {
    if (v <= 0) throw InvalidWeight("weights must be strictly positive");
    dvalues_.push_back(to_double(v));
  }
}

WeightFn WeightFn::constant(const CubeComplex& X, const Rational& c) {
  return WeightFn(std::vector<Rational>(X.hyperplane_count(), c));
}

WeightFn WeightFn::explicit_values(const CubeComplex& X, const std::vector<double>& vals) {
  if (static_cast<int>(vals.size()) != X.hyperplane_count())
    throw InvalidWeight("expected one weight per hyperplane");
  std::vector<Rational> rs;
  rs.reserve(vals.size());
  for (double v : vals) rs.emplace_back(v);
  return WeightFn(std::move(rs));
}

WeightFn distance_weight(const CubeComplex& X) {
  std::vector<Rational> vals;
  vals.reserve(X.hyperplane_count());
  for (const Hyperplane& h : X.hyperplanes()) {
    int best = -1;
    for (int e : h.dual_edges) {
      auto [u, v] = X.graph().edges[e];
      int near = X.far_side(h.id, u) ? v : u;
      int d = X.base_distance(near);
      if (best < 0 || d < best) best = d;
    }
    vals.push_back(half_int(1) + best);
  }
  return WeightFn(std::move(vals));
}

int properness_profile(const WeightFn& w, double M) {
  int count = 0;
  for (int h = 0; h < w.size(); ++h)
    if (w.value(h) <= M) ++count;
  return count;
}

double adaptedness_gap(const CubeComplex& X, const WeightFn& w, const Automorphism& g) {
  double sup = 0;
  for (int h = 0; h < X.hyperplane_count(); ++h)
    sup = std::max(sup, std::abs(w.value(h) - w.value(g.hyperplane_map[h])));
  return sup;
}

WeightFn pulled_back(const CubeComplex& X, const WeightFn& w, const Automorphism& g) {
  // gw(H) = w(g^{-1}H): invert the hyperplane map.
  std::vector<int> inv(X.hyperplane_count());
  for (int h = 0; h < X.hyperplane_count(); ++h) inv[g.hyperplane_map[h]] = h;
  std::vector<Rational> vals(X.hyperplane_count());
  for (int h = 0; h < X.hyperplane_count(); ++h) vals[h] = w.at(inv[h]);
  return WeightFn(std::move(vals));
}

}  // namespace cubespec
