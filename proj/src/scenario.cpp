#include "kernel_lab/scenario.hpp"

#include <cmath>
#include <fstream>

#include "kernel_lab/errors.hpp"
#include "kernel_lab/specfun.hpp"

namespace kernel_lab {

namespace {

using Json = nlohmann::ordered_json;

template <class T>
T get(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ContractError(std::string("scenario: bad value for '") + key + "'");
  }
}

Point to_point(const Json& j, const char* what) {
  if (!j.is_array() || j.empty() || j.size() > 2 || !j[0].is_number() || (j.size() == 2 && !j[1].is_number())) {
    throw ContractError(std::string("scenario: ") + what + " must be [x] or [x, y]");
  }
  return {j[0].get<double>(), j.size() == 2 ? j[1].get<double>() : 0.0};
}

std::vector<double> positive_list(const Json& j, const char* key) {
  auto v = get<std::vector<double>>(j, key, {});
  for (const double t : v) {
    if (!(t > 0.0)) throw ContractError(std::string("scenario: entries of '") + key + "' must be positive");
  }
  return v;
}

void check_nodes(int n, const char* key) {
  if (n < 8 || n > 1 << 16 || n % 2 != 0) {
    throw ContractError(std::string("scenario: '") + key + "' must be even and in [8, 65536]");
  }
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "kernel") return Command::kernel;
  if (name == "reproduce") return Command::reproduce;
  if (name == "hadamard") return Command::hadamard;
  if (name == "limit") return Command::limit;
  if (name == "residual") return Command::residual;
  if (name == "selftest") return Command::selftest;
  throw ContractError("unknown command '" + name + "'");
}

std::string command_name(Command c) {
  switch (c) {
    case Command::kernel: return "kernel";
    case Command::reproduce: return "reproduce";
    case Command::hadamard: return "hadamard";
    case Command::limit: return "limit";
    case Command::residual: return "residual";
    case Command::selftest: return "selftest";
  }
  return "?";
}

BoundaryField BoundaryPreset::sample(const GridPtr& grid) const {
  const bool interval = grid->domain().kind() == DomainKind::interval;
  switch (kind) {
    case Kind::constant:
      return BoundaryField::sample(grid, [this](Point) { return c; });
    case Kind::cosine: {
      if (interval) throw ContractError("scenario: the cosine preset needs a disk");
      auto f = BoundaryField::zeros(grid);
      for (int i = 0; i < grid->size(); ++i) f[i] = c * std::cos(k * grid->angle(i));
      return f;
    }
    case Kind::endpoints: {
      if (!interval) throw ContractError("scenario: the endpoints preset needs an interval");
      return BoundaryField::sample(grid, [this](Point z) { return z.x < 0.0 ? left : right; });
    }
  }
  throw ContractError("scenario: unknown boundary preset");
}

Scenario Scenario::from_json(const Json& j, const Defaults& defaults) {
  if (!j.is_object()) throw ContractError("scenario: top level must be an object");
  Scenario sc;
  sc.source = j;
  sc.command = parse_command(get<std::string>(j, "command", "selftest"));

  if (j.contains("domain")) {
    const auto& d = j.at("domain");
    const auto kind = get<std::string>(d, "kind", "disk");
    const double r = get<double>(d, "radius", 1.0);
    if (!(r > 0.0) || !std::isfinite(r)) throw ContractError("scenario: domain.radius must be positive");
    if (kind == "interval") {
      sc.domain = ModelDomain::interval(r);
    } else if (kind == "disk") {
      sc.domain = ModelDomain::disk(r);
    } else {
      throw ContractError("scenario: domain.kind must be 'interval' or 'disk'");
    }
  }
  const bool interval = sc.domain.kind() == DomainKind::interval;

  if (j.contains("params")) {
    const auto& p = j.at("params");
    sc.a = get<double>(p, "a", 1.0);
    sc.s = get<double>(p, "s", 0.0);
  }
  if (sc.a != 1.0) FracParams::make(sc.a, sc.s);

  if (j.contains("points")) {
    const auto& pts = j.at("points");
    if (!pts.is_array()) throw ContractError("scenario: 'points' must be an array");
    for (const auto& p : pts) sc.points.push_back(to_point(p, "each point"));
  }
  if (j.contains("pairs")) {
    const auto& prs = j.at("pairs");
    if (!prs.is_array()) throw ContractError("scenario: 'pairs' must be an array");
    for (const auto& p : prs) {
      if (!p.is_array() || p.size() != 2) throw ContractError("scenario: each pair must be [point, point]");
      sc.pairs.emplace_back(to_point(p[0], "pair point"), to_point(p[1], "pair point"));
    }
  }
  for (const auto& p : sc.points) sc.domain.require_interior(p, "scenario point");
  for (const auto& [x, y] : sc.pairs) {
    sc.domain.require_interior(x, "scenario pair");
    sc.domain.require_interior(y, "scenario pair");
  }

  if (j.contains("boundary_data")) {
    const auto& b = j.at("boundary_data");
    BoundaryPreset bp;
    const auto preset = get<std::string>(b, "preset", "constant");
    bp.c = get<double>(b, "c", 1.0);
    if (preset == "constant") {
      bp.kind = BoundaryPreset::Kind::constant;
    } else if (preset == "cosine") {
      bp.kind = BoundaryPreset::Kind::cosine;
      bp.k = get<int>(b, "k", 1);
      if (interval) throw ContractError("scenario: the cosine preset needs a disk");
    } else if (preset == "endpoints") {
      bp.kind = BoundaryPreset::Kind::endpoints;
      bp.left = get<double>(b, "left", 1.0);
      bp.right = get<double>(b, "right", 1.0);
      if (!interval) throw ContractError("scenario: the endpoints preset needs an interval");
    } else {
      throw ContractError("scenario: unknown boundary preset '" + preset + "'");
    }
    sc.boundary = bp;
  }

  sc.nodes = defaults.boundary_nodes;
  sc.quadrature = defaults.quadrature;
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    sc.nodes = get<int>(g, "nodes", sc.nodes);
    sc.alt_nodes = get<int>(g, "alt_nodes", 0);
    check_nodes(sc.nodes, "grid.nodes");
    if (sc.alt_nodes != 0) check_nodes(sc.alt_nodes, "grid.alt_nodes");
  }
  if (j.contains("quadrature")) {
    const auto& q = j.at("quadrature");
    auto& qs = sc.quadrature;
    qs.resolution = get<int>(q, "resolution", qs.resolution);
    qs.angles = get<int>(q, "angles", qs.angles);
    qs.rel_tol = get<double>(q, "rel_tol", qs.rel_tol);
    qs.abs_tol = get<double>(q, "abs_tol", qs.abs_tol);
    qs.max_evals = get<std::int64_t>(q, "max_evals", qs.max_evals);
    qs.max_doublings = get<int>(q, "max_doublings", qs.max_doublings);
    if (qs.resolution < 1 || qs.angles < 4 || !(qs.rel_tol > 0.0) || !(qs.abs_tol > 0.0) || qs.max_evals < 1 ||
        qs.max_doublings < 0) {
      throw ContractError("scenario: quadrature settings out of range");
    }
  }
  if (sc.command == Command::residual) sc.tolerance = defaults.residual_tolerance;
  sc.tolerance = get<double>(j, "tolerance", sc.tolerance);
  if (!(sc.tolerance > 0.0)) throw ContractError("scenario: 'tolerance' must be positive");

  sc.a_list = j.contains("a_list") ? positive_list(j, "a_list") : defaults.limit_orders;
  for (const double a : sc.a_list) {
    if (!(a < 1.0)) throw ContractError("scenario: entries of 'a_list' must lie in (0,1)");
  }
  sc.steps = j.contains("steps") ? positive_list(j, "steps") : defaults.fd_steps;
  sc.distances = j.contains("distances") ? positive_list(j, "distances") : defaults.trace_distances;

  if (j.contains("mollifier")) {
    const auto& m = j.at("mollifier");
    if (m.contains("center")) sc.mollifier_center = to_point(m.at("center"), "mollifier.center");
    sc.mollifier_width = get<double>(m, "width", sc.mollifier_width);
  } else {
    sc.mollifier_center = {defaults.residual_center, 0.0};
    sc.mollifier_width = defaults.residual_width;
  }
  if (!(sc.mollifier_width > 0.0)) throw ContractError("scenario: mollifier.width must be positive");

  if (j.contains("outputs")) {
    const auto& o = j.at("outputs");
    sc.report_name = get<std::string>(o, "report", "");
    sc.table_name = get<std::string>(o, "table", "");
  }
  if (sc.report_name.empty()) sc.report_name = command_name(sc.command) + ".json";
  if (sc.table_name.empty()) sc.table_name = command_name(sc.command) + ".csv";
  return sc;
}

Scenario Scenario::load(const std::string& path, const Defaults& defaults) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open scenario file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ContractError("scenario file '" + path + "': " + e.what());
  }
  return from_json(j, defaults);
}

Scenario Scenario::selftest(const Defaults& defaults) {
  return from_json(Json{{"command", "selftest"}}, defaults);
}

}  // namespace kernel_lab
