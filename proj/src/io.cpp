#include "cubespec/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cubespec {

ComplexInput load_complex_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;

  ComplexInput ci;
  ci.graph.vertex_count = j.at("vertices").get<int>();
  for (const auto& e : j.at("edges"))
    ci.graph.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  ci.graph.base = j.value("base", 0);

  if (j.contains("weights")) {
    const auto& w = j.at("weights");
    ci.weight_mode = w.at("mode").get<std::string>();
    if (ci.weight_mode == "constant")
      ci.constant_value = w.at("value").get<double>();
    else if (ci.weight_mode == "explicit")
      ci.explicit_values = w.at("values").get<std::vector<double>>();
    else if (ci.weight_mode != "distance")
      throw std::runtime_error("unknown weight mode: " + ci.weight_mode);
  }
  return ci;
}

WeightFn make_weights(const CubeComplex& X, const ComplexInput& in) {
  if (in.weight_mode == "constant") {
    if (in.constant_value <= 0) throw InvalidWeight("constant weight must be positive");
    return WeightFn::constant(X, Rational(in.constant_value));
  }
  if (in.weight_mode == "explicit") return WeightFn::explicit_values(X, in.explicit_values);
  return distance_weight(X);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    if (!out.good()) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed for " + path);
}

}  // namespace cubespec
