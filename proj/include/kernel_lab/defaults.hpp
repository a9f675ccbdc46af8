#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kernel_lab/quadrature.hpp"

namespace kernel_lab {

inline constexpr const char* kDefaultsVersion = "kernel-lab.defaults/1";
inline constexpr const char* kDefaultsEnv = "KERNEL_LAB_DEFAULTS";

/// Pinned numerical defaults. The built-in values equal data/defaults.json.
struct Defaults {
  std::string version = kDefaultsVersion;
  std::uint64_t seed = 20240611;
  int boundary_nodes = 256;
  int oracle_nodes = 512;
  int poisson_nodes = 64;
  int trace_nodes = 64;
  QuadratureSpec quadrature{};

  double residual_tolerance = 1e-2;
  double residual_center = 0.0;
  double residual_width = 0.2;
  std::vector<double> residual_points{0.0, 0.1, -0.15, 0.5};
  int residual_radial_nodes = 0;
  int residual_angular_nodes = 16;

  std::vector<double> fd_steps{1e-2, 1e-3};
  std::vector<double> limit_orders{0.9, 0.99, 0.999};
  std::vector<double> trace_distances{1e-1, 1e-2, 1e-3};
  int gram_points = 10;
  int cauchy_schwarz_pairs = 200;

  /// Missing keys keep their built-in values; a wrong version or a bad
  /// value throws ContractError.
  static Defaults from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

/// Reads the defaults file. With no explicit path the environment variable
/// is consulted, then the file shipped with the source tree; when neither
/// exists the built-in values are used.
Defaults load_defaults(const std::optional<std::string>& path = std::nullopt);

/// Path of the file load_defaults would read, or empty for built-ins.
std::string resolve_defaults_path(const std::optional<std::string>& path = std::nullopt);

}  // namespace kernel_lab
