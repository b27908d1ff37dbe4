#pragma once

#include <stdexcept>
#include <vector>

#include "cubespec/complex.hpp"
#include "cubespec/operators.hpp"
#include "cubespec/weights.hpp"

namespace cubespec {

struct NotAutomorphism : std::runtime_error {
  int edge_u = -1, edge_v = -1;  // witness edge whose image is missing
  NotAutomorphism(int u, int v)
      : std::runtime_error("vertex permutation does not preserve edge (" +
                           std::to_string(u) + "," + std::to_string(v) + ")"),
        edge_u(u),
        edge_v(v) {}
};

struct IdentityViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SupportViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph automorphism with the induced maps on hyperplanes and cubes.
struct Automorphism {
  std::vector<int> vertex_map;
  std::vector<int> hyperplane_map;
  std::vector<int> cube_map;
};

// Checks edge preservation and derives the induced maps.
// Throws NotAutomorphism with an edge witness.
Automorphism validate_automorphism(const CubeComplex& X, const std::vector<int>& perm);

// All automorphisms by backtracking; intended for small complexes.
std::vector<Automorphism> enumerate_automorphisms(const CubeComplex& X, int max_vertices = 10);

// Signed permutation u_g on the cube basis; sign is the parity of the
// permutation induced on the ascending-ordered mid(C) by H -> gH.
struct SignedPermutation {
  std::vector<int> cube_map;
  std::vector<int> sign;  // +1 / -1 per source cube
};

SignedPermutation unitary(const CubeComplex& X, const Automorphism& g);

// Composition g after h.
Automorphism compose(const CubeComplex& X, const Automorphism& g, const Automorphism& h);

// U_g D_{JV,w,P} U_g^T; verified entrywise against direct assembly with
// weight gw and base gP.  Throws IdentityViolated on mismatch.
GradedOperator translated_jv(const CubeComplex& X, const WeightFn& w, const Automorphism& g);

struct DifferenceReport {
  double norm = 0;             // spectral norm of g(D_JV) - D_JV
  double sup_weight_gap = 0;   // sup_H |gw(H) - w(H)|
  double max_separating = 0;   // max{w(H) : H separates P, gP}
  double ratio = 0;            // norm / (sup_weight_gap + max_separating), 0 if denom 0
  bool support_ok = true;
};

// Measures g(D_JV) - D_JV and checks the support law: entries vanish
// unless the mediating hyperplane separates P from gP or gw != w on it.
// Throws SupportViolated on a support-law failure.
DifferenceReport difference_report(const CubeComplex& X, const WeightFn& w,
                                   const Automorphism& g);

}  // namespace cubespec
