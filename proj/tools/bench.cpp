// Serial vs OpenMP timing for the three parallel kernels.
#include <chrono>
#include <cstdio>

#include "cubespec/complex.hpp"
#include "cubespec/spectrum.hpp"
#include "cubespec/weights.hpp"

using namespace cubespec;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clock_type::now();
    f();
    double ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

void report(const char* name, double serial_ms, double omp_ms) {
  std::printf("%-28s serial %9.2f ms   omp %9.2f ms   speedup %.2fx\n", name, serial_ms,
              omp_ms, serial_ms / omp_ms);
}

}  // namespace

int main() {
  // ~400-vertex product complex.
  Graph g = make_product(make_grid(5, 5), make_grid(4, 4));
  g.validate_and_normalize();
  std::printf("graph: %d vertices, %zu edges\n", g.vertex_count, g.edges.size());

  auto dist = all_pairs_distances_serial(g);
  report("all-pairs BFS",
         time_ms([&] { all_pairs_distances_serial(g); }),
         time_ms([&] { all_pairs_distances_omp(g); }));

  report("median check",
         time_ms([&] { median_witness_serial(g, dist); }),
         time_ms([&] { median_witness_omp(g, dist); }));

  auto X = CubeComplex::build(g);
  auto w = distance_weight(X);
  double lambda = 60.0;
  long long ns = 0, np = 0;
  report("global eigenvalue counting",
         time_ms([&] { ns = global_counting_serial(X, w, lambda); }),
         time_ms([&] { np = global_counting_omp(X, w, lambda); }));
  std::printf("counts agree: %s (N = %lld)\n", ns == np ? "yes" : "NO", ns);
  return ns == np ? 0 : 1;
}
