#pragma once

// Scenario files: one JSON object per run. See scenarios/ for examples.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kernel_lab/defaults.hpp"
#include "kernel_lab/geometry.hpp"
#include "kernel_lab/quadrature.hpp"

namespace kernel_lab {

enum class Command { kernel, reproduce, hadamard, limit, residual, selftest };

Command parse_command(const std::string& name);
std::string command_name(Command c);

/// Named boundary data. `constant` is c everywhere; `cosine` is
/// c cos(k theta) on the circle; `endpoints` is (left, right) on the interval.
struct BoundaryPreset {
  enum class Kind { constant, cosine, endpoints } kind = Kind::constant;
  double c = 1.0;
  int k = 1;
  double left = 1.0;
  double right = 1.0;

  BoundaryField sample(const GridPtr& grid) const;
};

struct Scenario {
  Command command = Command::selftest;
  ModelDomain domain = ModelDomain::disk(1.0);
  /// a = 1 selects the classical objects.
  double a = 1.0;
  double s = 0.0;
  std::vector<Point> points;
  std::vector<std::pair<Point, Point>> pairs;
  std::optional<BoundaryPreset> boundary;
  int nodes = 256;
  int alt_nodes = 0;  ///< 0: twice `nodes`
  QuadratureSpec quadrature{};
  double tolerance = 1e-8;
  std::vector<double> a_list;
  std::vector<double> steps;
  std::vector<double> distances;
  Point mollifier_center{};
  double mollifier_width = 0.2;
  std::string report_name;
  std::string table_name;
  /// The file as read, echoed into reports.
  nlohmann::ordered_json source = nlohmann::ordered_json::object();

  bool fractional() const { return a < 1.0; }

  /// Validates everything the commands rely on; throws ContractError or
  /// DomainError with a message naming the offending key.
  static Scenario from_json(const nlohmann::ordered_json& j, const Defaults& defaults);
  static Scenario load(const std::string& path, const Defaults& defaults);
  /// Scenario for `selftest` when no file is given.
  static Scenario selftest(const Defaults& defaults);
};

}  // namespace kernel_lab
