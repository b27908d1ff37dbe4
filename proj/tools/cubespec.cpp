// Command-line front end: validate/inspect complexes, assemble operators,
// emit spectra and verification reports.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 validation failure,
// 3 failed invariant in verify-all, 4 numeric failure.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubespec/action.hpp"
#include "cubespec/homotopy.hpp"
#include "cubespec/io.hpp"
#include "cubespec/operators.hpp"
#include "cubespec/spectrum.hpp"

using namespace cubespec;
using nlohmann::json;

namespace {

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    atomic_write(out_path, content);
}

struct Loaded {
  CubeComplex X;
  WeightFn w;
};

// Throws on I/O/parse (callers map to exit 1) and on validation (exit 2).
Loaded load(const std::string& path) {
  ComplexInput in = load_complex_json(path);
  CubeComplex X = CubeComplex::build(in.graph);
  WeightFn w = make_weights(X, in);
  return {std::move(X), std::move(w)};
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

int cmd_validate(const std::string& path, const std::string& out) {
  ComplexInput in;
  try {
    in = load_complex_json(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  json rep;
  try {
    auto X = CubeComplex::build(in.graph);
    rep["valid"] = true;
    rep["vertices"] = X.vertex_count();
    rep["hyperplanes"] = X.hyperplane_count();
    rep["cubes"] = X.cube_count();
    emit(out, rep.dump(2) + "\n");
    return 0;
  } catch (const NotMedian& e) {
    rep["valid"] = false;
    rep["reason"] = "not_median";
    rep["witness"] = {{"u", e.witness.u},
                      {"v", e.witness.v},
                      {"x", e.witness.x},
                      {"median_count", e.witness.median_count}};
  } catch (const std::exception& e) {
    rep["valid"] = false;
    rep["reason"] = e.what();
  }
  emit(out, rep.dump(2) + "\n");
  return 2;
}

int cmd_info(const std::string& path, const std::string& out) {
  auto [X, w] = load(path);
  json rep;
  rep["vertices"] = X.vertex_count();
  rep["edges"] = X.graph().edges.size();
  rep["base"] = X.base();
  rep["dimension"] = X.dimension();
  rep["hyperplanes"] = X.hyperplane_count();
  std::vector<int> per_dim(X.dimension() + 1, 0);
  for (const Cube& c : X.cubes()) ++per_dim[c.dim];
  rep["cubes_per_dim"] = per_dim;
  rep["cube_count"] = X.cube_count();
  json weights = json::array();
  for (int h = 0; h < X.hyperplane_count(); ++h) weights.push_back(rational_str(w.at(h)));
  rep["weights"] = weights;
  json blocks = json::array();
  for (int q = 0; q < X.vertex_count(); ++q) blocks.push_back(X.block(q).size());
  rep["block_sizes"] = blocks;
  emit(out, rep.dump(2) + "\n");
  return 0;
}

int cmd_jv(const std::string& path, const std::string& out) {
  auto [X, w] = load(path);
  auto D = jv_operator(X, w);
  auto law = d_squared_law_check(X, w);
  json rep;
  rep["size"] = D.size;
  json entries = json::array();
  for (const auto& e : D.entries)
    entries.push_back({e.row, e.col, rational_str(e.value)});
  rep["entries"] = entries;
  rep["d_squared_zero"] = GradedOperator::product(assemble_d(X, w), assemble_d(X, w))
                              .entries.empty();
  rep["square_law_deviation"] = rational_str(law.max_abs_deviation);
  rep["cohomology_dims"] = cohomology_dims(X, w);
  emit(out, rep.dump(2) + "\n");
  return 0;
}

int cmd_dr(const std::string& path, double lambda_max, const std::string& out) {
  auto [X, w] = load(path);
  std::ostringstream csv;
  csv << "vertex,eigenvalue,multiplicity\n";
  long long total = 0;
  for (int q = 0; q < X.vertex_count(); ++q) {
    auto s = block_spectrum(X, w, q, lambda_max);
    for (const auto& e : s.entries) {
      csv << q << "," << format_double(e.eigenvalue) << "," << e.multiplicity << "\n";
      total += e.multiplicity;
    }
  }
  csv << "# N(" << format_double(lambda_max) << ") = " << total << "\n";
  emit(out, csv.str());
  return 0;
}

int cmd_homotopy(const std::string& path, const std::vector<double>& s_list,
                 const std::string& out) {
  auto [X, w] = load(path);
  auto rows = convergence_scan(X, w, s_list);
  std::ostringstream csv;
  csv << "s,max_deviation,bound,max_identity_err\n";
  for (const auto& r : rows)
    csv << format_double(r.s) << "," << format_double(r.max_deviation) << ","
        << format_double(r.bound) << "," << format_double(r.max_identity_err) << "\n";
  emit(out, csv.str());
  return 0;
}

int cmd_galerkin(double w, int n, int k, const std::string& out) {
  std::ostringstream csv;
  csv << "model,n,index,eigenvalue,expected,rel_error\n";
  for (int grid : {n / 2, n}) {
    auto eigs = galerkin_interval(w, grid, k);
    for (int i = 0; i < k; ++i) {
      double expected = i == 0 ? 0.0 : M_PI * M_PI * i * i + w * w;
      double rel = expected > 0 ? std::abs(eigs[i] - expected) / expected : std::abs(eigs[i]);
      csv << "interval," << grid << "," << i << "," << format_double(eigs[i]) << ","
          << format_double(expected) << "," << format_double(rel) << "\n";
    }
    auto two = galerkin_two_cell(w, grid, 1);
    double base = witten_base_term(w);
    csv << "two_cell," << grid << ",0," << format_double(two[0]) << ","
        << format_double(base) << "," << format_double(std::abs(two[0] - base) / base)
        << "\n";
  }
  emit(out, csv.str());
  return 0;
}

int cmd_action(const std::string& path, const std::string& perm_json, bool all,
               const std::string& out) {
  auto [X, w] = load(path);
  std::vector<Automorphism> autos;
  if (all) {
    autos = enumerate_automorphisms(X);
  } else {
    auto arr = json::parse(perm_json);
    autos.push_back(validate_automorphism(X, arr.get<std::vector<int>>()));
  }
  json reps = json::array();
  for (const auto& g : autos) {
    translated_jv(X, w, g);  // exact conjugation identity; throws on mismatch
    auto rep = difference_report(X, w, g);
    reps.push_back({{"vertex_map", g.vertex_map},
                    {"norm", rep.norm},
                    {"sup_weight_gap", rep.sup_weight_gap},
                    {"max_separating", rep.max_separating},
                    {"ratio", rep.ratio},
                    {"support_ok", rep.support_ok}});
  }
  emit(out, reps.dump(2) + "\n");
  return 0;
}

int cmd_generate(const std::string& family, int a, int b, const std::string& out) {
  Graph g;
  if (family == "path")
    g = make_path(a);
  else if (family == "grid")
    g = make_grid(a, b);
  else if (family == "hypercube")
    g = make_hypercube(a);
  else if (family == "tree")
    g = make_balanced_binary_tree(a);
  else if (family == "tree-product")
    g = make_product(make_balanced_binary_tree(a), make_balanced_binary_tree(b));
  else {
    std::cerr << "error: unknown family " << family << "\n";
    return 1;
  }
  g.validate_and_normalize();
  json j;
  j["vertices"] = g.vertex_count;
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = edges;
  j["base"] = g.base;
  emit(out, j.dump(2) + "\n");
  return 0;
}

int cmd_verify_all(const std::string& path, const std::string& out) {
  auto [X, w] = load(path);
  std::ostringstream log;
  int failed = 0;
  auto check = [&](const std::string& name, bool ok, const std::string& slack = "") {
    log << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!slack.empty()) log << "  slack=" << slack;
    log << "\n";
    if (!ok) ++failed;
  };

  check("median_graph", !validate_median(X.graph()).has_value());
  bool positive = true;
  for (int h = 0; h < w.size(); ++h) positive = positive && w.at(h) > 0;
  check("weights_positive", positive);

  auto d = assemble_d(X, w);
  check("d_squared_zero", GradedOperator::product(d, d).entries.empty());
  check("delta_is_transpose", assemble_delta(X, w) == d.transpose());
  auto law = d_squared_law_check(X, w);
  check("jv_square_law_exact", law.max_abs_deviation == 0,
        rational_str(law.max_abs_deviation));

  auto dims = cohomology_dims(X, w);
  bool coh = !dims.empty() && dims[0] == 1;
  for (size_t q = 1; q < dims.size(); ++q) coh = coh && dims[q] == 0;
  check("cohomology_trivial", coh);

  size_t total = 0;
  bool sizes = true;
  for (int q = 0; q < X.vertex_count(); ++q) {
    sizes = sizes && X.block(q).size() == (size_t{1} << X.sah(q).size());
    total += X.block(q).size();
  }
  check("block_partition", sizes && total == static_cast<size_t>(X.cube_count()));

  double max_gap = 0;
  for (int q = 0; q < X.vertex_count(); ++q) {
    auto s = block_spectrum(X, w, q, 50.0);
    max_gap = std::max(max_gap,
                       std::abs(s.min_eigenvalue() - block_lower_bound(X, w, q)));
  }
  check("spectrum_min_equals_lower_bound", max_gap < 1e-12, format_double(max_gap));

  double lam = 1.0;
  check("counting_serial_omp_agree",
        global_counting_serial(X, w, lam) == global_counting_omp(X, w, lam));
  check("bfs_serial_omp_agree",
        all_pairs_distances_serial(X.graph()) == all_pairs_distances_omp(X.graph()));

  bool hom_ok = true;
  double max_id_err = 0;
  try {
    for (const auto& r : convergence_scan(X, w, {1.0, 0.1, 0.01}))
      max_id_err = std::max(max_id_err, r.max_identity_err);
  } catch (const BoundViolated&) {
    hom_ok = false;
  }
  check("homotopy_deviation_bound", hom_ok);
  check("homotopy_cross_identity", max_id_err < 1e-12, format_double(max_id_err));

  if (X.vertex_count() <= 10) {
    bool equi = true;
    try {
      for (const auto& g : enumerate_automorphisms(X)) {
        translated_jv(X, w, g);
        difference_report(X, w, g);
      }
    } catch (const std::exception&) {
      equi = false;
    }
    check("equivariance_exact", equi);
  }

  log << (failed ? "FAILED" : "OK") << " (" << failed << " failed)\n";
  emit(out, log.str());
  return failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite CAT(0) cube complex spectral toolkit"};
  app.require_subcommand(1);

  std::string input, output, perm_json, family = "grid";
  double lambda_max = 12.0, gw = 1.0;
  int gn = 2000, gk = 4, fa = 3, fb = 3;
  std::vector<double> s_list = {1.0, 0.5, 0.1, 0.01};
  bool all_autos = false;

  auto add_io = [&](CLI::App* c, bool needs_input = true) {
    if (needs_input) c->add_option("input", input, "complex JSON file")->required();
    c->add_option("-o,--output", output, "output path (default stdout)");
  };

  add_io(app.add_subcommand("validate", "check the median/CAT(0) property"));
  add_io(app.add_subcommand("info", "structural summary"));
  add_io(app.add_subcommand("jv", "Julg-Valette operator and exact checks"));
  auto* dr = app.add_subcommand("dr", "Witten-de Rham block spectra");
  add_io(dr);
  dr->add_option("--lambda-max", lambda_max, "truncation threshold");
  auto* hom = app.add_subcommand("homotopy", "deformation convergence table");
  add_io(hom);
  hom->add_option("--s", s_list, "deformation parameters");
  auto* gal = app.add_subcommand("galerkin", "finite-difference spectral oracle");
  add_io(gal, false);
  gal->add_option("--w", gw, "weight");
  gal->add_option("--n", gn, "grid size");
  gal->add_option("--k", gk, "eigenvalue count");
  auto* act = app.add_subcommand("action", "automorphism difference reports");
  add_io(act);
  act->add_option("--perm", perm_json, "vertex permutation as JSON array");
  act->add_flag("--all", all_autos, "enumerate all automorphisms");
  auto* gen = app.add_subcommand("generate", "emit a generated complex");
  add_io(gen, false);
  gen->add_option("--family", family, "path|grid|hypercube|tree|tree-product")->required();
  gen->add_option("--a", fa, "first size parameter");
  gen->add_option("--b", fb, "second size parameter");
  add_io(app.add_subcommand("verify-all", "run every invariant suite"));

  CLI11_PARSE(app, argc, argv);
  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  try {
    if (name == "validate") return cmd_validate(input, output);
    if (name == "info") return cmd_info(input, output);
    if (name == "jv") return cmd_jv(input, output);
    if (name == "dr") return cmd_dr(input, lambda_max, output);
    if (name == "homotopy") return cmd_homotopy(input, s_list, output);
    if (name == "galerkin") return cmd_galerkin(gw, gn, gk, output);
    if (name == "action") {
      if (!all_autos && perm_json.empty()) {
        std::cerr << "error: action needs --perm or --all\n";
        return 1;
      }
      return cmd_action(input, perm_json, all_autos, output);
    }
    if (name == "generate") return cmd_generate(family, fa, fb, output);
    if (name == "verify-all") return cmd_verify_all(input, output);
  } catch (const NotMedian& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Disconnected& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotAutomorphism& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TruncationOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const BoundViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const IdentityViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const SupportViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const LawViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
