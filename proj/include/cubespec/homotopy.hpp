#pragma once

#include <stdexcept>
#include <vector>

#include "cubespec/complex.hpp"
#include "cubespec/operators.hpp"
#include "cubespec/weights.hpp"

namespace cubespec {

struct BoundViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Normalized s-deformation of the differential on the cube basis.
// Sparsity and signs match assemble_d; entries tend to w(H) as s -> 0.
struct DeformedOperator {
  double s = 1;
  int size = 0;
  struct Entry {
    int row, col;
    double value;
    int hyperplane;  // mediating hyperplane
  };
  std::vector<Entry> entries;       // the s^{-1} e_{sw} part, sorted by (row, col)
  std::vector<double> norm_factors;  // a_s(C) per cube

  // Symmetric completion (entries plus their transposes) as dense matrix.
  Eigen::MatrixXd symmetric_dense() const;
};

// L2 norm of e^{s w_C} dx_{H_1}...dx_{H_q}:
// product over mid(C) of sqrt((e^{2sw} - 1) / (2sw)).
double a_s_norm(const CubeComplex& X, const WeightFn& w, int cube_id, double s);

// w(H) * sqrt((1 - e^{-2sw(H)}) / (2sw(H))).
double deformed_entry(double s, double weight);

DeformedOperator assemble_deformed(const CubeComplex& X, const WeightFn& w, double s);

struct ConvergenceRow {
  double s;
  double max_deviation;   // max_H |deformed_entry(s,H) - w(H)|
  double bound;           // s * max_H w(H)^2 / 2
  double max_identity_err;  // |entry^2 - s^{-2} base_term(s w)|
};

// Per-s deviation table; asserts the bound |entry - w| <= s w^2 / 2 for
// every hyperplane.  Throws BoundViolated otherwise.
std::vector<ConvergenceRow> convergence_scan(const CubeComplex& X, const WeightFn& w,
                                             const std::vector<double>& s_list);

}  // namespace cubespec
