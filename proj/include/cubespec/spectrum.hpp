#pragma once

#include <stdexcept>
#include <vector>

#include "cubespec/complex.hpp"
#include "cubespec/weights.hpp"

namespace cubespec {

struct TruncationOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Squared-eigenvalue list of the one-edge Witten operator with weight w:
// bottom term 1/2 w (1 - e^{-2w}), then pi^2 k^2 + w^2 for k >= 1.
struct FactorSpectrum {
  double weight;

  double base_term() const;
  double series(int k) const;
};

double witten_base_term(double w);

// Sorted truncated multiset of squared eigenvalues.
struct SpectralList {
  struct Entry {
    double eigenvalue;
    int multiplicity;
  };
  std::vector<Entry> entries;
  double truncation = 0;

  int total_multiplicity() const;
  double min_eigenvalue() const;  // entries must be nonempty
};

inline constexpr int kDefaultSpectrumCap = 1000000;

// All sums of one term per hyperplane in sah(Q), up to lambda_max.
// Empty sah gives {0}.  Throws TruncationOverflow past the cap.
SpectralList block_spectrum(const CubeComplex& X, const WeightFn& w, int vertex,
                            double lambda_max, int cap = kDefaultSpectrumCap);

// N(lambda) = sum over vertices of the block spectrum counts.
// Serial reference and OpenMP variant; they must agree exactly.
long long global_counting_serial(const CubeComplex& X, const WeightFn& w, double lambda,
                                 int cap = kDefaultSpectrumCap);
long long global_counting_omp(const CubeComplex& X, const WeightFn& w, double lambda,
                              int cap = kDefaultSpectrumCap);

// Sum of base terms over sah(Q); equals the block spectrum minimum.
double block_lower_bound(const CubeComplex& X, const WeightFn& w, int vertex);

// Finite-difference oracle for the one-edge Witten operator on a staggered
// grid with n subintervals: 0-forms on the n-1 interior nodes (Dirichlet),
// 1-forms on the n midpoints.  Returns the k smallest squared eigenvalues
// of the full symmetric operator (the exact discrete kernel included).
std::vector<double> galerkin_interval(double w, int n, int k);

// Kernel 1-form of the discrete operator, one sample per midpoint.
std::vector<double> galerkin_kernel_vector(double w, int n);

// Same discretization augmented with the vertex 0-form coupled by
// 1 -> w e^{w y} dx; smallest squared eigenvalue tends to the base term.
std::vector<double> galerkin_two_cell(double w, int n, int k);

struct EstimateViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScalarEstimateReport {
  double max_calculus_lhs = 0;  // max |w e^{-wx} - (w+m) e^{-(w+m)x}| observed
  double calculus_bound = 0;    // 2M
  double max_xe = 0;            // max x e^{-x} observed
};

// Grid check of the two scalar bounds; throws EstimateViolated if either
// fails.  Requires 0 <= m <= M.
ScalarEstimateReport scalar_estimates(double M, double m, double w_max, double x_max,
                                      int grid);

}  // namespace cubespec
