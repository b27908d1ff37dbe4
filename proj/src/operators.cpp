#include "cubespec/operators.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <map>

namespace cubespec {

namespace {

void sort_entries(std::vector<GradedOperator::Entry>& e) {
  std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
}

}  // namespace

GradedOperator GradedOperator::transpose() const {
  GradedOperator t;
  t.size = size;
  t.shift = -shift;
  t.entries.reserve(entries.size());
  for (const Entry& e : entries) t.entries.push_back({e.col, e.row, e.value});
  sort_entries(t.entries);
  return t;
}

Eigen::MatrixXd GradedOperator::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  for (const Entry& e : entries) m(e.row, e.col) += to_double(e.value);
  return m;
}

std::vector<std::vector<Rational>> GradedOperator::dense_exact() const {
  std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size, 0));
  for (const Entry& e : entries) m[e.row][e.col] += e.value;
  return m;
}

GradedOperator GradedOperator::sum(const GradedOperator& a, const GradedOperator& b) {
  GradedOperator r;
  r.size = a.size;
  r.shift = a.shift == b.shift ? a.shift : 0;
  std::map<std::pair<int, int>, Rational> acc;
  for (const Entry& e : a.entries) acc[{e.row, e.col}] += e.value;
  for (const Entry& e : b.entries) acc[{e.row, e.col}] += e.value;
  for (const auto& [rc, v] : acc)
    if (v != 0) r.entries.push_back({rc.first, rc.second, v});
  return r;
}

GradedOperator GradedOperator::product(const GradedOperator& a, const GradedOperator& b) {
  // Column index of b for sparse accumulation.
  std::vector<std::vector<const Entry*>> by_col(b.size);
  for (const Entry& e : b.entries) by_col[e.col].push_back(&e);
  std::vector<std::vector<const Entry*>> a_by_col(a.size);
  for (const Entry& e : a.entries) a_by_col[e.col].push_back(&e);

  GradedOperator r;
  r.size = a.size;
  r.shift = a.shift + b.shift;
  std::map<std::pair<int, int>, Rational> acc;
  for (int col = 0; col < b.size; ++col)
    for (const Entry* eb : by_col[col])
      for (const Entry* ea : a_by_col[eb->row])
        acc[{ea->row, col}] += ea->value * eb->value;
  for (const auto& [rc, v] : acc)
    if (v != 0) r.entries.push_back({rc.first, rc.second, v});
  return r;
}

bool GradedOperator::operator==(const GradedOperator& other) const {
  if (size != other.size) return false;
  auto norm = [](const GradedOperator& g) {
    std::map<std::pair<int, int>, Rational> acc;
    for (const Entry& e : g.entries)
      if (e.value != 0) acc[{e.row, e.col}] += e.value;
    return acc;
  };
  return norm(*this) == norm(other);
}

int insertion_sign(const Cube& c, int hyperplane_id) {
  int below = static_cast<int>(
      std::lower_bound(c.mid.begin(), c.mid.end(), hyperplane_id) - c.mid.begin());
  return below % 2 == 0 ? 1 : -1;
}

GradedOperator assemble_d(const CubeComplex& X, const WeightFn& w) {
  GradedOperator d;
  d.size = X.cube_count();
  d.shift = +1;
  for (const Cube& c : X.cubes())
    for (int h : X.sah(c.id)) {
      int target = X.coface(c.id, h);
      Rational v = w.at(h) * insertion_sign(c, h);
      d.entries.push_back({target, c.id, v});
    }
  sort_entries(d.entries);
  return d;
}

GradedOperator assemble_delta(const CubeComplex& X, const WeightFn& w) {
  return assemble_d(X, w).transpose();
}

GradedOperator jv_operator(const CubeComplex& X, const WeightFn& w) {
  GradedOperator d = assemble_d(X, w);
  return GradedOperator::sum(d, d.transpose());
}

DSquaredReport d_squared_law_check(const CubeComplex& X, const WeightFn& w) {
  GradedOperator D = jv_operator(X, w);
  GradedOperator D2 = GradedOperator::product(D, D);
  std::vector<Rational> expected(X.cube_count(), 0);
  for (const Cube& c : X.cubes()) {
    for (int h : X.sah(c.id)) expected[c.id] += w.at(h) * w.at(h);
    for (int h : c.mid) expected[c.id] += w.at(h) * w.at(h);
  }
  for (const auto& e : D2.entries) {
    if (e.row != e.col)
      throw LawViolated(e.col, "D^2 has off-diagonal entry at (" +
                                   std::to_string(e.row) + "," +
                                   std::to_string(e.col) + ")");
    if (e.value != expected[e.row])
      throw LawViolated(e.row, "D^2 diagonal mismatch at cube " +
                                   std::to_string(e.row));
    expected[e.row] = 0;  // consumed
  }
  for (int c = 0; c < X.cube_count(); ++c)
    if (expected[c] != 0)
      throw LawViolated(c, "D^2 missing diagonal entry at cube " + std::to_string(c));
  return DSquaredReport{};
}

int exact_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[rank][col];
      for (int c2 = col; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
    }
    ++rank;
  }
  return rank;
}

std::vector<int> cohomology_dims(const CubeComplex& X, const WeightFn& w) {
  const int top = X.dimension();
  std::vector<int> dim_count(top + 1, 0);
  for (const Cube& c : X.cubes()) ++dim_count[c.dim];

  // Local index of each cube within its degree.
  std::vector<int> local(X.cube_count());
  {
    std::vector<int> next(top + 1, 0);
    for (const Cube& c : X.cubes()) local[c.id] = next[c.dim]++;
  }

  GradedOperator d = assemble_d(X, w);
  // Degree-q blocks of d as exact matrices.
  std::vector<int> rank(top + 1, 0);  // rank of d^q : A^q -> A^{q+1}
  for (int q = 0; q < top; ++q) {
    std::vector<std::vector<Rational>> block(
        dim_count[q + 1], std::vector<Rational>(dim_count[q], 0));
    for (const auto& e : d.entries) {
      if (X.cube(e.col).dim != q) continue;
      block[local[e.row]][local[e.col]] = e.value;
    }
    rank[q] = exact_rank(std::move(block));
  }
  std::vector<int> dims(top + 1, 0);
  for (int q = 0; q <= top; ++q) {
    int ker = dim_count[q] - (q < top ? rank[q] : 0);
    int im = q > 0 ? rank[q - 1] : 0;
    dims[q] = ker - im;
  }
  return dims;
}

Eigen::MatrixXd bounded_transform(const GradedOperator& op) {
  Eigen::MatrixXd D = op.dense();
  if (!D.isApprox(D.transpose(), 1e-12))
    throw EigenFailure("bounded transform requires a symmetric operator");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(D);
  if (es.info() != Eigen::Success) throw EigenFailure("eigendecomposition failed");
  Eigen::VectorXd f = es.eigenvalues();
  for (int i = 0; i < f.size(); ++i) f[i] = f[i] / std::sqrt(1.0 + f[i] * f[i]);
  return es.eigenvectors() * f.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace cubespec
