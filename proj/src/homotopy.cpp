#include "cubespec/homotopy.hpp"

#include <algorithm>
#include <cmath>

#include "cubespec/spectrum.hpp"

namespace cubespec {

namespace {

// (e^{2t} - 1) / (2t), continuous at t = 0.
double expm1_ratio(double t) {
  if (std::abs(t) < 1e-8) return 1.0 + t;
  return std::expm1(2.0 * t) / (2.0 * t);
}

}  // namespace

double a_s_norm(const CubeComplex& X, const WeightFn& w, int cube_id, double s) {
  double prod = 1.0;
  for (int h : X.mid(cube_id)) prod *= std::sqrt(expm1_ratio(s * w.value(h)));
  return prod;
}

double deformed_entry(double s, double weight) {
  double t = s * weight;
  // w sqrt((1 - e^{-2t}) / (2t))
  return weight * std::sqrt(-std::expm1(-2.0 * t) / (2.0 * t));
}

Eigen::MatrixXd DeformedOperator::symmetric_dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  for (const Entry& e : entries) {
    m(e.row, e.col) += e.value;
    m(e.col, e.row) += e.value;
  }
  return m;
}

DeformedOperator assemble_deformed(const CubeComplex& X, const WeightFn& w, double s) {
  DeformedOperator op;
  op.s = s;
  op.size = X.cube_count();
  for (const Cube& c : X.cubes())
    for (int h : X.sah(c.id)) {
      int target = X.coface(c.id, h);
      double v = insertion_sign(c, h) * deformed_entry(s, w.value(h));
      op.entries.push_back({target, c.id, v, h});
    }
  std::sort(op.entries.begin(), op.entries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  op.norm_factors.resize(X.cube_count());
  for (const Cube& c : X.cubes()) op.norm_factors[c.id] = a_s_norm(X, w, c.id, s);
  return op;
}

std::vector<ConvergenceRow> convergence_scan(const CubeComplex& X, const WeightFn& w,
                                             const std::vector<double>& s_list) {
  std::vector<ConvergenceRow> rows;
  for (double s : s_list) {
    ConvergenceRow row{s, 0, 0, 0};
    for (int h = 0; h < X.hyperplane_count(); ++h) {
      double wh = w.value(h);
      double entry = deformed_entry(s, wh);
      double dev = std::abs(entry - wh);
      double bound = s * wh * wh / 2.0;
      if (dev > bound)
        throw BoundViolated("|deformed_entry - w| exceeded s w^2/2 at hyperplane " +
                            std::to_string(h));
      row.max_deviation = std::max(row.max_deviation, dev);
      row.bound = std::max(row.bound, bound);
      // entry^2 = s^{-2} base_term(s w)
      double identity_err =
          std::abs(entry * entry - witten_base_term(s * wh) / (s * s));
      row.max_identity_err = std::max(row.max_identity_err, identity_err);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cubespec
