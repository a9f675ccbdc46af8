#include "kernel_lab/defaults.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "kernel_lab/errors.hpp"

#ifndef KERNEL_LAB_SOURCE_DEFAULTS
#define KERNEL_LAB_SOURCE_DEFAULTS ""
#endif

namespace kernel_lab {

namespace {

template <class T>
void read(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("defaults: bad value for '") + key + "': " + e.what());
  }
}

void require_positive(double v, const char* key) {
  if (!(v > 0.0)) throw ContractError(std::string("defaults: '") + key + "' must be positive");
}

}  // namespace

Defaults Defaults::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ContractError("defaults: top level must be an object");
  Defaults d;
  read(j, "version", d.version);
  if (d.version != kDefaultsVersion) throw ContractError("defaults: unsupported version '" + d.version + "'");
  read(j, "seed", d.seed);
  read(j, "boundary_nodes", d.boundary_nodes);
  read(j, "oracle_nodes", d.oracle_nodes);
  read(j, "poisson_nodes", d.poisson_nodes);
  read(j, "trace_nodes", d.trace_nodes);
  if (j.contains("quadrature")) {
    const auto& q = j.at("quadrature");
    read(q, "resolution", d.quadrature.resolution);
    read(q, "angles", d.quadrature.angles);
    read(q, "rel_tol", d.quadrature.rel_tol);
    read(q, "abs_tol", d.quadrature.abs_tol);
    read(q, "max_evals", d.quadrature.max_evals);
    read(q, "max_doublings", d.quadrature.max_doublings);
  }
  if (j.contains("residual")) {
    const auto& r = j.at("residual");
    read(r, "tolerance", d.residual_tolerance);
    read(r, "center", d.residual_center);
    read(r, "width", d.residual_width);
    read(r, "points", d.residual_points);
    read(r, "radial_nodes", d.residual_radial_nodes);
    read(r, "angular_nodes", d.residual_angular_nodes);
  }
  read(j, "fd_steps", d.fd_steps);
  read(j, "limit_orders", d.limit_orders);
  read(j, "trace_distances", d.trace_distances);
  read(j, "gram_points", d.gram_points);
  read(j, "cauchy_schwarz_pairs", d.cauchy_schwarz_pairs);

  for (int n : {d.boundary_nodes, d.oracle_nodes, d.poisson_nodes, d.trace_nodes}) {
    if (n < 8 || n % 2 != 0 || n > 1 << 16) throw ContractError("defaults: grid sizes must be even and in [8, 65536]");
  }
  require_positive(d.quadrature.rel_tol, "quadrature.rel_tol");
  require_positive(d.quadrature.abs_tol, "quadrature.abs_tol");
  require_positive(static_cast<double>(d.quadrature.max_evals), "quadrature.max_evals");
  require_positive(d.quadrature.resolution, "quadrature.resolution");
  require_positive(d.residual_tolerance, "residual.tolerance");
  require_positive(d.residual_width, "residual.width");
  for (double t : d.fd_steps) require_positive(t, "fd_steps");
  return d;
}

nlohmann::ordered_json Defaults::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = version;
  j["seed"] = seed;
  j["boundary_nodes"] = boundary_nodes;
  j["oracle_nodes"] = oracle_nodes;
  j["poisson_nodes"] = poisson_nodes;
  j["trace_nodes"] = trace_nodes;
  j["quadrature"] = {{"resolution", quadrature.resolution}, {"angles", quadrature.angles},
                     {"rel_tol", quadrature.rel_tol},       {"abs_tol", quadrature.abs_tol},
                     {"max_evals", quadrature.max_evals},   {"max_doublings", quadrature.max_doublings}};
  j["residual"] = {{"tolerance", residual_tolerance}, {"center", residual_center},
                   {"width", residual_width},         {"points", residual_points},
                   {"radial_nodes", residual_radial_nodes}, {"angular_nodes", residual_angular_nodes}};
  j["fd_steps"] = fd_steps;
  j["limit_orders"] = limit_orders;
  j["trace_distances"] = trace_distances;
  j["gram_points"] = gram_points;
  j["cauchy_schwarz_pairs"] = cauchy_schwarz_pairs;
  return j;
}

std::string resolve_defaults_path(const std::optional<std::string>& path) {
  if (path) return *path;
  if (const char* env = std::getenv(kDefaultsEnv); env && *env) return env;
  const std::string shipped = KERNEL_LAB_SOURCE_DEFAULTS;
  if (!shipped.empty() && std::filesystem::exists(shipped)) return shipped;
  return {};
}

Defaults load_defaults(const std::optional<std::string>& path) {
  const std::string file = resolve_defaults_path(path);
  if (file.empty()) return Defaults{};
  std::ifstream in(file);
  if (!in) throw ContractError("cannot open defaults file '" + file + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ContractError("defaults file '" + file + "': " + e.what());
  }
  return Defaults::from_json(j);
}

}  // namespace kernel_lab
