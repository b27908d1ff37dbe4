#include "cubespec/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cubespec {

Automorphism validate_automorphism(const CubeComplex& X, const std::vector<int>& perm) {
  const Graph& g = X.graph();
  const int n = g.vertex_count;
  if (static_cast<int>(perm.size()) != n)
    throw NotAutomorphism(-1, -1);
  {
    std::vector<char> hit(n, 0);
    for (int v : perm) {
      if (v < 0 || v >= n || hit[v]) throw NotAutomorphism(-1, -1);
      hit[v] = 1;
    }
  }
  std::set<std::pair<int, int>> edge_set(g.edges.begin(), g.edges.end());
  for (const auto& [u, v] : g.edges) {
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    if (!edge_set.count({a, b})) throw NotAutomorphism(u, v);
  }

  Automorphism aut;
  aut.vertex_map = perm;

  // Induced hyperplane map via dual edges.
  std::map<std::pair<int, int>, int> edge_index;
  for (size_t e = 0; e < g.edges.size(); ++e) edge_index[g.edges[e]] = static_cast<int>(e);
  aut.hyperplane_map.resize(X.hyperplane_count());
  for (const Hyperplane& h : X.hyperplanes()) {
    auto [u, v] = g.edges[h.dual_edges.front()];
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    aut.hyperplane_map[h.id] = X.edge_hyperplane(edge_index.at({a, b}));
  }
  // Consistency: every dual edge must land in the same class.
  for (const Hyperplane& h : X.hyperplanes())
    for (int e : h.dual_edges) {
      auto [u, v] = g.edges[e];
      int a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      if (X.edge_hyperplane(edge_index.at({a, b})) != aut.hyperplane_map[h.id])
        throw NotAutomorphism(u, v);
    }

  aut.cube_map.resize(X.cube_count());
  for (const Cube& c : X.cubes()) {
    std::vector<int> image;
    image.reserve(c.vertices.size());
    for (int v : c.vertices) image.push_back(perm[v]);
    std::sort(image.begin(), image.end());
    int target = X.find_cube(image);
    if (target < 0) throw NotAutomorphism(c.vertices.front(), -1);
    aut.cube_map[c.id] = target;
  }
  return aut;
}

namespace {

void enumerate_rec(const std::vector<std::vector<int>>& adj, std::vector<int>& perm,
                   std::vector<char>& used, int next,
                   std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(adj.size());
  if (next == n) {
    out.push_back(perm);
    return;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || adj[next].size() != adj[cand].size()) continue;
    bool ok = true;
    for (int nbr : adj[next]) {
      if (nbr >= next) continue;  // only earlier vertices are pinned
      if (!std::binary_search(adj[cand].begin(), adj[cand].end(), perm[nbr])) {
        ok = false;
        break;
      }
    }
    // Non-neighbors must stay non-neighbors.
    if (ok)
      for (int prev = 0; prev < next; ++prev) {
        bool was = std::binary_search(adj[next].begin(), adj[next].end(), prev);
        bool is = std::binary_search(adj[cand].begin(), adj[cand].end(), perm[prev]);
        if (was != is) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;
    perm[next] = cand;
    used[cand] = 1;
    enumerate_rec(adj, perm, used, next + 1, out);
    used[cand] = 0;
  }
}

}  // namespace

std::vector<Automorphism> enumerate_automorphisms(const CubeComplex& X, int max_vertices) {
  if (X.vertex_count() > max_vertices)
    throw std::runtime_error("automorphism enumeration capped at " +
                             std::to_string(max_vertices) + " vertices");
  auto adj = X.graph().adjacency();
  std::vector<int> perm(X.vertex_count());
  std::vector<char> used(X.vertex_count(), 0);
  std::vector<std::vector<int>> perms;
  enumerate_rec(adj, perm, used, 0, perms);
  std::vector<Automorphism> out;
  out.reserve(perms.size());
  for (const auto& p : perms) out.push_back(validate_automorphism(X, p));
  return out;
}

namespace {

int permutation_parity(const std::vector<int>& values) {
  // Parity of the permutation sorting `values` ascending.
  int swaps = 0;
  std::vector<int> v = values;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) {
        std::swap(v[i], v[j]);
        ++swaps;
      }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

SignedPermutation unitary(const CubeComplex& X, const Automorphism& g) {
  SignedPermutation u;
  u.cube_map = g.cube_map;
  u.sign.resize(X.cube_count());
  for (const Cube& c : X.cubes()) {
    std::vector<int> mapped;
    mapped.reserve(c.mid.size());
    for (int h : c.mid) mapped.push_back(g.hyperplane_map[h]);
    u.sign[c.id] = permutation_parity(mapped);
  }
  return u;
}

Automorphism compose(const CubeComplex& X, const Automorphism& g, const Automorphism& h) {
  std::vector<int> perm(X.vertex_count());
  for (int v = 0; v < X.vertex_count(); ++v) perm[v] = g.vertex_map[h.vertex_map[v]];
  return validate_automorphism(X, perm);
}

namespace {

GradedOperator conjugate(const GradedOperator& D, const SignedPermutation& u) {
  GradedOperator r;
  r.size = D.size;
  r.shift = D.shift;
  for (const auto& e : D.entries) {
    Rational v = e.value * (u.sign[e.row] * u.sign[e.col]);
    r.entries.push_back({u.cube_map[e.row], u.cube_map[e.col], v});
  }
  std::sort(r.entries.begin(), r.entries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  return r;
}

}  // namespace

GradedOperator translated_jv(const CubeComplex& X, const WeightFn& w, const Automorphism& g) {
  GradedOperator conj = conjugate(jv_operator(X, w), unitary(X, g));
  CubeComplex Xg = X.rebase(g.vertex_map[X.base()]);
  GradedOperator direct = jv_operator(Xg, pulled_back(X, w, g));
  if (!(conj == direct))
    throw IdentityViolated("U_g D U_g^T != D_{gw,gP}");
  return conj;
}

DifferenceReport difference_report(const CubeComplex& X, const WeightFn& w,
                                   const Automorphism& g) {
  DifferenceReport rep;
  GradedOperator D = jv_operator(X, w);
  GradedOperator gD = translated_jv(X, w, g);
  for (auto& e : D.entries) e.value = -e.value;
  GradedOperator diff = GradedOperator::sum(gD, D);

  WeightFn gw = pulled_back(X, w, g);
  for (int h = 0; h < X.hyperplane_count(); ++h)
    rep.sup_weight_gap = std::max(rep.sup_weight_gap, std::abs(gw.value(h) - w.value(h)));
  int gP = g.vertex_map[X.base()];
  for (int h = 0; h < X.hyperplane_count(); ++h)
    if (X.separates(h, X.base(), gP))
      rep.max_separating = std::max(rep.max_separating, w.value(h));

  // Support law: a nonzero entry joins cubes differing by one hyperplane
  // (the mediating one); that hyperplane must separate P from gP or carry
  // a changed weight.
  for (const auto& e : diff.entries) {
    if (e.value == 0) continue;
    const Cube& big = X.cube(e.row).dim > X.cube(e.col).dim ? X.cube(e.row) : X.cube(e.col);
    const Cube& small = X.cube(e.row).dim > X.cube(e.col).dim ? X.cube(e.col) : X.cube(e.row);
    int mediating = -1;
    for (int h : big.mid)
      if (!std::binary_search(small.mid.begin(), small.mid.end(), h)) mediating = h;
    if (mediating < 0 ||
        !(X.separates(mediating, X.base(), gP) || gw.at(mediating) != w.at(mediating))) {
      rep.support_ok = false;
      throw SupportViolated("difference entry with unexplained support at (" +
                            std::to_string(e.row) + "," + std::to_string(e.col) + ")");
    }
  }

  Eigen::MatrixXd dd = diff.dense();
  rep.norm = dd.rows() == 0 ? 0.0 : dd.operatorNorm();
  double denom = rep.sup_weight_gap + rep.max_separating;
  rep.ratio = denom > 0 ? rep.norm / denom : 0.0;
  return rep;
}

}  // namespace cubespec
