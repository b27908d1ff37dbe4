#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubespec/complex.hpp"
#include "cubespec/weights.hpp"

namespace cubespec {

struct ComplexInput {
  Graph graph;
  // Weight mode from the optional "weights" field; empty means distance.
  std::string weight_mode = "distance";
  double constant_value = 1.0;
  std::vector<double> explicit_values;
};

// Parses {"vertices": N, "edges": [[u,v],...], "base": p, "weights": {...}}.
ComplexInput load_complex_json(const std::string& path);

WeightFn make_weights(const CubeComplex& X, const ComplexInput& in);

// Floats with 12 significant digits, for reproducible diffable output.
std::string format_double(double v);

// Write-then-rename; no partial files on failure.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace cubespec
