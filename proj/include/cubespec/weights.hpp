#pragma once

#include <stdexcept>
#include <vector>

#include "cubespec/complex.hpp"
#include "cubespec/rational.hpp"

namespace cubespec {

struct InvalidWeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Positive weight per hyperplane.  Weights produced by distance_weight are
// exact rationals (half-integers); user-supplied weights are converted but
// may carry float rounding.
class WeightFn {
 public:
  explicit WeightFn(std::vector<Rational> values);

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& at(int hyperplane_id) const { return values_.at(hyperplane_id); }
  double value(int hyperplane_id) const { return dvalues_.at(hyperplane_id); }
  const std::vector<Rational>& values() const { return values_; }

  static WeightFn constant(const CubeComplex& X, const Rational& c);
  static WeightFn explicit_values(const CubeComplex& X, const std::vector<double>& vals);

 private:
  std::vector<Rational> values_;
  std::vector<double> dvalues_;
};

// w(H) = 1/2 + min distance from the base vertex to a near-side endpoint
// of a dual edge of H.
WeightFn distance_weight(const CubeComplex& X);

// |{H : w(H) <= M}|.
int properness_profile(const WeightFn& w, double M);

struct Automorphism;  // action.hpp

// sup_H |w(H) - w(gH)|.
double adaptedness_gap(const CubeComplex& X, const WeightFn& w, const Automorphism& g);

// gw(H) = w(g^{-1} H).
WeightFn pulled_back(const CubeComplex& X, const WeightFn& w, const Automorphism& g);

}  // namespace cubespec
