#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "cubespec/complex.hpp"
#include "cubespec/rational.hpp"
#include "cubespec/weights.hpp"

namespace cubespec {

struct LawViolated : std::runtime_error {
  int cube_id = -1;
  LawViolated(int cube, const std::string& what_)
      : std::runtime_error(what_), cube_id(cube) {}
};

// Sparse exact matrix over the cube basis.  Degree shift: +1 for d, -1 for
// delta, 0 for symmetric combinations (odd for the dimension parity).
struct GradedOperator {
  int size = 0;
  int shift = 0;
  struct Entry {
    int row, col;
    Rational value;
  };
  std::vector<Entry> entries;  // sorted by (row, col), values nonzero

  GradedOperator transpose() const;
  Eigen::MatrixXd dense() const;
  std::vector<std::vector<Rational>> dense_exact() const;

  static GradedOperator sum(const GradedOperator& a, const GradedOperator& b);
  static GradedOperator product(const GradedOperator& a, const GradedOperator& b);
  bool operator==(const GradedOperator& other) const;
};

// Wedge reordering parity for inserting H into the ascending mid(C):
// (-1)^{#{H' in mid(C) : H' < H}}.
int insertion_sign(const Cube& c, int hyperplane_id);

// d_JV: entry (coface(C,H), C) = sign(C,H) * w(H) for H in sah(C).
GradedOperator assemble_d(const CubeComplex& X, const WeightFn& w);
// delta_JV = d^T.
GradedOperator assemble_delta(const CubeComplex& X, const WeightFn& w);
// D_JV = d + delta.
GradedOperator jv_operator(const CubeComplex& X, const WeightFn& w);

struct DSquaredReport {
  Rational max_abs_deviation = 0;  // 0 in exact mode
  bool exact = true;
};

// Asserts D^2 is diagonal with entries sum_{sah(C)} w^2 + sum_{mid(C)} w^2.
// Throws LawViolated on the first offending cube.
DSquaredReport d_squared_law_check(const CubeComplex& X, const WeightFn& w);

// dim ker d^q / im d^{q-1} per degree, by exact rank computation.
std::vector<int> cohomology_dims(const CubeComplex& X, const WeightFn& w);

// Rank of an exact matrix by fraction-free Gaussian elimination.
int exact_rank(std::vector<std::vector<Rational>> m);

struct EigenFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bounded transform F = D (1 + D^2)^{-1/2} via spectral decomposition.
Eigen::MatrixXd bounded_transform(const GradedOperator& op);

}  // namespace cubespec
