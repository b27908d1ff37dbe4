#include "cubespec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace cubespec {

double witten_base_term(double w) { return 0.5 * w * (1.0 - std::exp(-2.0 * w)); }

double FactorSpectrum::base_term() const { return witten_base_term(weight); }

double FactorSpectrum::series(int k) const {
  return M_PI * M_PI * static_cast<double>(k) * static_cast<double>(k) + weight * weight;
}

int SpectralList::total_multiplicity() const {
  int t = 0;
  for (const Entry& e : entries) t += e.multiplicity;
  return t;
}

double SpectralList::min_eigenvalue() const { return entries.front().eigenvalue; }

namespace {

// Terms of one factor list up to the cap value, ascending.
std::vector<double> factor_terms(double w, double cap_value) {
  FactorSpectrum f{w};
  std::vector<double> terms;
  if (f.base_term() <= cap_value) terms.push_back(f.base_term());
  for (int k = 1; f.series(k) <= cap_value; ++k) terms.push_back(f.series(k));
  return terms;
}

void merge_with_multiplicity(std::vector<double>& sums, SpectralList& out) {
  std::sort(sums.begin(), sums.end());
  for (double v : sums) {
    if (!out.entries.empty() &&
        std::abs(out.entries.back().eigenvalue - v) <=
            1e-9 * std::max(1.0, std::abs(v)))
      ++out.entries.back().multiplicity;
    else
      out.entries.push_back({v, 1});
  }
}

}  // namespace

SpectralList block_spectrum(const CubeComplex& X, const WeightFn& w, int vertex,
                            double lambda_max, int cap) {
  SpectralList out;
  out.truncation = lambda_max;
  const auto& sah = X.sah(vertex);
  if (sah.empty()) {
    out.entries.push_back({0.0, 1});
    return out;
  }
  const int q = static_cast<int>(sah.size());
  std::vector<std::vector<double>> factors(q);
  std::vector<double> min_tail(q + 1, 0.0);  // sum of minima of factors j..q-1
  for (int j = 0; j < q; ++j) factors[j] = factor_terms(w.value(sah[j]), lambda_max);
  for (int j = q - 1; j >= 0; --j) {
    if (factors[j].empty()) return out;  // some factor exceeds lambda_max entirely
    min_tail[j] = min_tail[j + 1] + factors[j].front();
  }

  std::vector<double> sums;
  std::function<void(int, double)> dfs = [&](int j, double acc) {
    if (j == q) {
      if (static_cast<int>(sums.size()) >= cap)
        throw TruncationOverflow("block spectrum exceeds entry cap");
      sums.push_back(acc);
      return;
    }
    for (double t : factors[j]) {
      // Remaining factors contribute at least their minima.
      if (acc + t + min_tail[j + 1] > lambda_max) break;
      dfs(j + 1, acc + t);
    }
  };
  dfs(0, 0.0);
  merge_with_multiplicity(sums, out);
  return out;
}

long long global_counting_serial(const CubeComplex& X, const WeightFn& w, double lambda,
                                 int cap) {
  long long total = 0;
  for (int q = 0; q < X.vertex_count(); ++q)
    total += block_spectrum(X, w, q, lambda, cap).total_multiplicity();
  return total;
}

long long global_counting_omp(const CubeComplex& X, const WeightFn& w, double lambda,
                              int cap) {
  long long total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (int q = 0; q < X.vertex_count(); ++q)
    total += block_spectrum(X, w, q, lambda, cap).total_multiplicity();
  return total;
}

double block_lower_bound(const CubeComplex& X, const WeightFn& w, int vertex) {
  double sum = 0;
  for (int h : X.sah(vertex)) sum += witten_base_term(w.value(h));
  return sum;
}

namespace {

// Symmetric tridiagonal with an optional dense arrow row/column appended:
//   [ T  c ]
//   [ c' a ]
// Eigenvalue counting below a shift via LDL^T pivots.
struct ArrowTridiag {
  std::vector<double> diag;  // tridiagonal diagonal
  std::vector<double> off;   // subdiagonal, size diag.size()-1
  std::vector<double> arrow; // coupling column, empty if plain tridiagonal
  double arrow_diag = 0;

  int size() const {
    return static_cast<int>(diag.size()) + (arrow.empty() ? 0 : 1);
  }

  // Number of eigenvalues strictly below x.
  int count_below(double x) const {
    const double tiny = 1e-300;
    int count = 0;
    double pivot = 1.0;
    double arrow_rem = arrow_diag - x;
    double l = 0;  // remnant of the arrow row against the current pivot column
    for (size_t i = 0; i < diag.size(); ++i) {
      double b = i > 0 ? off[i - 1] : 0.0;
      double p = (diag[i] - x) - b * b / pivot;
      if (p == 0) p = tiny;
      if (!arrow.empty()) {
        double li = arrow[i] - b * l / pivot;
        arrow_rem -= li * li / p;
        l = li;
      }
      if (p < 0) ++count;
      pivot = p;
    }
    if (!arrow.empty() && arrow_rem < 0) ++count;
    return count;
  }

  // k smallest eigenvalues by bisection on count_below.
  std::vector<double> smallest(int k) const {
    k = std::min(k, size());
    // Gershgorin bounds.
    double lo = diag.empty() ? 0.0 : diag[0], hi = lo;
    for (size_t i = 0; i < diag.size(); ++i) {
      double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                 (i + 1 < diag.size() ? std::abs(off[i]) : 0.0) +
                 (arrow.empty() ? 0.0 : std::abs(arrow[i]));
      lo = std::min(lo, diag[i] - r);
      hi = std::max(hi, diag[i] + r);
    }
    if (!arrow.empty()) {
      double r = std::accumulate(arrow.begin(), arrow.end(), 0.0,
                                 [](double a, double b) { return a + std::abs(b); });
      lo = std::min(lo, arrow_diag - r);
      hi = std::max(hi, arrow_diag + r);
    }
    std::vector<double> eigs(k);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < k; ++j) {
      double a = lo, b = hi;
      for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, std::abs(b)); ++it) {
        double mid = 0.5 * (a + b);
        if (count_below(mid) >= j + 1)
          b = mid;
        else
          a = mid;
      }
      eigs[j] = 0.5 * (a + b);
    }
    return eigs;
  }
};

// Discrete d_w on the staggered grid: B maps the n-1 interior node values
// to the n midpoint values, g_i = (f_i - f_{i-1})/h + w (f_i + f_{i-1})/2.
// Rows/columns are orthonormal (the common sqrt(h) scale cancels).
struct StaggeredOp {
  int n;
  double h, w;
  double lower(double) const { return -1.0 / h + w / 2.0; }  // f_{i-1}
  double upper(double) const { return 1.0 / h + w / 2.0; }   // f_i
};

// B^T B: symmetric tridiagonal on the interior nodes.
ArrowTridiag normal_matrix(double w, int n) {
  StaggeredOp op{n, 1.0 / n, w};
  double a = op.lower(0), b = op.upper(0);
  ArrowTridiag t;
  t.diag.assign(n - 1, a * a + b * b);
  t.off.assign(n - 2, a * b);
  return t;
}

}  // namespace

std::vector<double> galerkin_interval(double w, int n, int k) {
  // The 1-form block B B^T has a one-dimensional exact kernel (n midpoints
  // vs n-1 nodes); its nonzero spectrum equals that of B^T B.
  std::vector<double> out{0.0};
  if (k > 1) {
    auto eigs = normal_matrix(w, n).smallest(k - 1);
    out.insert(out.end(), eigs.begin(), eigs.end());
  }
  return out;
}

std::vector<double> galerkin_kernel_vector(double w, int n) {
  // Left null vector of B: (1/h + w/2) g_j + (-1/h + w/2) g_{j+1} = 0.
  double h = 1.0 / n;
  double ratio = (1.0 / h + w / 2.0) / (1.0 / h - w / 2.0);
  std::vector<double> g(n);
  g[0] = 1.0;
  for (int j = 1; j < n; ++j) g[j] = g[j - 1] * ratio;
  double norm = std::sqrt(std::inner_product(g.begin(), g.end(), g.begin(), 0.0));
  for (double& v : g) v /= norm;
  return g;
}

std::vector<double> galerkin_two_cell(double w, int n, int k) {
  // Augment with the vertex 0-form coupled through 1 -> w e^{w y} dx.  In
  // orthonormal coordinates the extra column is sqrt(h) w e^{w y_i} at the
  // midpoints; the squared operator on the 0-form side is B^T B plus a
  // dense arrow row/column.
  double h = 1.0 / n;
  std::vector<double> c(n);
  for (int i = 0; i < n; ++i) {
    double y = (i + 0.5) * h - 1.0;
    c[i] = std::sqrt(h) * w * std::exp(w * y);
  }
  StaggeredOp op{n, h, w};
  ArrowTridiag t = normal_matrix(w, n);
  t.arrow.assign(n - 1, 0.0);
  // (B^T c)_j couples node j to the vertex: rows j and j+1 of B hit f_j.
  for (int j = 0; j < n - 1; ++j)
    t.arrow[j] = op.upper(0) * c[j] + op.lower(0) * c[j + 1];
  t.arrow_diag = std::inner_product(c.begin(), c.end(), c.begin(), 0.0);
  return t.smallest(k);
}

ScalarEstimateReport scalar_estimates(double M, double m, double w_max, double x_max,
                                      int grid) {
  if (!(0 <= m && m <= M)) throw EstimateViolated("requires 0 <= m <= M");
  ScalarEstimateReport rep;
  rep.calculus_bound = 2.0 * M;
  for (int i = 0; i <= grid; ++i) {
    double x = x_max * i / grid;
    rep.max_xe = std::max(rep.max_xe, x * std::exp(-x));
    for (int j = 0; j <= grid; ++j) {
      double w = w_max * j / grid;
      double lhs = std::abs(w * std::exp(-w * x) - (w + m) * std::exp(-(w + m) * x));
      rep.max_calculus_lhs = std::max(rep.max_calculus_lhs, lhs);
    }
  }
  if (rep.max_calculus_lhs > rep.calculus_bound)
    throw EstimateViolated("|w e^{-wx} - (w+m)e^{-(w+m)x}| exceeded 2M");
  if (rep.max_xe > 1.0) throw EstimateViolated("sup x e^{-x} exceeded 1");
  return rep;
}

}  // namespace cubespec
