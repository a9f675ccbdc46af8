#include "kernel_lab/commands.hpp"

#include <cmath>
#include <cstdio>

#include "kernel_lab/errors.hpp"
#include "kernel_lab/fracop.hpp"
#include "kernel_lab/green.hpp"
#include "kernel_lab/hadamard.hpp"
#include "kernel_lab/rkhs.hpp"
#include "kernel_lab/specfun.hpp"

namespace kernel_lab {

namespace {

RkhsOptions rkhs_options(const RunOptions& opts) {
  RkhsOptions r;
  r.unit_representation_constant = opts.corrupt_constants;
  return r;
}

std::string idx(const char* name, std::size_t i) { return std::string(name) + "[" + std::to_string(i) + "]"; }

std::string idx(const char* name, std::size_t i, std::size_t j) {
  return std::string(name) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

void require_fractional(const Scenario& sc, const char* command) {
  if (!sc.fractional()) throw ContractError(std::string(command) + " needs params.a in (0,1)");
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

CommandOutput cmd_kernel(const Scenario& sc, const RunOptions& opts) {
  CommandOutput out;
  auto& report = out.report;
  const auto grid = BoundaryGrid::make(sc.domain, sc.nodes);
  const bool oracle = !sc.fractional() && sc.domain.kind() == DomainKind::disk;
  KernelSpec spec{sc.fractional() ? KernelKind::fractional : KernelKind::classical, grid, sc.s, sc.a,
                  rkhs_options(opts)};
  const auto gram = gram_matrix(spec, sc.points);

  Table table;
  table.header = {"i", "j", "x_i", "y_i", "x_j", "y_j", "K"};
  if (oracle) {
    table.header.push_back("K_oracle");
    table.header.push_back("discrepancy");
  }
  for (std::size_t i = 0; i < sc.points.size(); ++i) {
    for (std::size_t j = 0; j < sc.points.size(); ++j) {
      const Point p = sc.points[i], q = sc.points[j];
      const double k = gram.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      std::vector<double> row{double(i), double(j), p.x, p.y, q.x, q.y, k};
      if (oracle) {
        const double o = kernel_classical_spectral_oracle(sc.domain, sc.s, p, q);
        row.push_back(o);
        row.push_back(k - o);
        if (j >= i) {
          report.add(CheckRecord::compare(idx("oracle", i, j), k, o, sc.tolerance, ToleranceKind::relative));
        }
      }
      table.rows.push_back(std::move(row));
    }
  }
  if (!sc.points.empty()) {
    report.add(CheckRecord::flag("gram_psd", gram.is_psd(1e-10), gram.min_eigenvalue()));
    report.metadata["min_eigenvalue"] = gram.min_eigenvalue();
    report.metadata["max_eigenvalue"] = gram.max_eigenvalue();
  }
  report.metadata["kernel"] = sc.fractional() ? "fractional" : "classical";
  out.table = std::move(table);
  return out;
}

CommandOutput cmd_reproduce(const Scenario& sc, const RunOptions& opts) {
  require_fractional(sc, "reproduce");
  CommandOutput out;
  auto& report = out.report;
  const auto rkhs = rkhs_options(opts);
  const auto grid = BoundaryGrid::make(sc.domain, sc.nodes);
  const BoundaryPreset preset = sc.boundary.value_or(BoundaryPreset{});
  const auto phi = preset.sample(grid);
  const double a = sc.a, r = sc.domain.radius();
  const bool interval = sc.domain.kind() == DomainKind::interval;

  Table table;
  table.header = {"x", "y", "u", "residual"};
  if (interval) table.header.push_back("u_closed_form");
  for (std::size_t i = 0; i < sc.points.size(); ++i) {
    const Point x = sc.points[i];
    const double u = poisson_extend_fractional(a, sc.s, phi, x, rkhs);
    const double res = reproducing_residual(a, sc.s, phi, x, sc.alt_nodes, rkhs);
    report.add(CheckRecord::at_most(idx("residual", i), res, sc.tolerance));
    std::vector<double> row{x.x, x.y, u, res};
    if (interval) {
      // u = (2R)^-a (R^2-x^2)^a [phi(-R)/(R+x) + phi(R)/(R-x)], using
      // Gamma(a)Gamma(a+1) kappa / a = 4^-a.
      const bool first_left = grid->node(0).x < 0.0;
      const double lv = first_left ? phi[0] : phi[1];
      const double rv = first_left ? phi[1] : phi[0];
      const double closed = std::pow(2.0 * r, -a) * std::pow(r * r - x.x * x.x, a) * (lv / (r + x.x) + rv / (r - x.x));
      report.add(CheckRecord::compare(idx("closed_form", i), u, closed, 1e-12, ToleranceKind::relative));
      row.push_back(closed);
    }
    table.rows.push_back(std::move(row));
  }
  if (!sc.distances.empty()) {
    const auto tr = trace_recovery(a, phi, sc.distances, 8, rkhs);
    report.add(CheckRecord::flag("trace_recovery_monotone", tr.monotone, tr.max_final_error));
    report.metadata["trace_distances"] = tr.distances;
    report.metadata["trace_final_error"] = tr.max_final_error;
  }
  report.metadata["negative_control"] = opts.corrupt_constants;
  out.table = std::move(table);
  return out;
}

CommandOutput cmd_hadamard(const Scenario& sc, const RunOptions&) {
  CommandOutput out;
  const auto grid = BoundaryGrid::make(sc.domain, sc.nodes);
  auto result = hadamard_report(grid, sc.a, sc.pairs, sc.steps, sc.tolerance);
  Table table;
  table.header = {"pair", "t", "fd", "exact", "abs_error"};
  for (std::size_t k = 0; k < result.rows.size(); ++k) {
    const auto& row = result.rows[k];
    for (std::size_t i = 0; i < row.steps.size(); ++i) {
      table.rows.push_back({double(k), row.steps[i], row.fd[i], row.exact, row.fd_error[i]});
    }
  }
  out.report = std::move(result.report);
  out.table = std::move(table);
  return out;
}

CommandOutput cmd_limit(const Scenario& sc, const RunOptions&) {
  Point x{}, y{};
  if (!sc.pairs.empty()) {
    x = sc.pairs.front().first;
    y = sc.pairs.front().second;
  } else if (sc.points.size() >= 2) {
    x = sc.points[0];
    y = sc.points[1];
  } else {
    throw ContractError("limit needs a pair or two points");
  }
  CommandOutput out;
  const auto grid = BoundaryGrid::make(sc.domain, sc.nodes);
  out.report = limit_consistency(grid, sc.s, x, y, sc.a_list);
  const double ref = out.report.metadata["reference_K_s_plus_3_2"].get<double>();
  Table table;
  table.header = {"a", "K_a", "K_ref", "abs_error", "rel_error"};
  for (std::size_t i = 0; i < sc.a_list.size(); ++i) {
    const auto& rec = out.report.records[i];
    table.rows.push_back({sc.a_list[i], rec.computed, ref, rec.abs_error, rec.abs_error / std::abs(ref)});
  }
  out.table = std::move(table);
  return out;
}

CommandOutput cmd_residual(const Scenario& sc, const RunOptions& opts) {
  require_fractional(sc, "residual");
  CommandOutput out;
  auto& report = out.report;
  const double getoor = 1.0 / torsion_constant(sc.domain.dim(), sc.a);
  const auto torsion = power_profile(sc.domain, sc.a);
  Table table;
  table.header = {"x", "y", "getoor_value", "getoor_reference"};
  for (std::size_t i = 0; i < sc.points.size(); ++i) {
    const Point p = sc.points[i];
    if (sc.domain.distance_to_boundary(p) < torsion.delta_min()) continue;
    const auto q = frac_laplacian_apply(torsion, sc.a, p, sc.quadrature);
    report.add(CheckRecord::compare(idx("getoor", i), q.value, getoor, 1e-3, ToleranceKind::relative));
    table.rows.push_back({p.x, p.y, q.value, getoor});
  }
  const auto moll = MollifierSpec::make(sc.domain, sc.mollifier_center, sc.mollifier_width);
  const auto res = residual_check(sc.domain, sc.a, moll, sc.points, sc.quadrature, sc.tolerance,
                                  {opts.defaults.residual_radial_nodes, opts.defaults.residual_angular_nodes});
  report.append(res);
  report.metadata = res.metadata;
  report.metadata["getoor_constant"] = getoor;
  out.table = std::move(table);
  return out;
}

CommandOutput cmd_selftest(const RunOptions& opts) {
  AcceptanceOptions acc;
  acc.defaults = opts.defaults;
  acc.rkhs = rkhs_options(opts);
  std::vector<CriterionOutcome> outcomes;
  CommandOutput out;
  out.report = selftest_report(acc, &outcomes);
  Table table;
  table.header = {"criterion", "pass", "failed_records"};
  for (const auto& o : outcomes) {
    int failed = 0;
    for (const auto& r : o.report.records) failed += r.pass ? 0 : 1;
    table.rows.push_back({double(o.id), o.pass() ? 1.0 : 0.0, double(failed)});
  }
  out.table = std::move(table);
  return out;
}

CommandOutput run_command(const Scenario& sc, const RunOptions& opts) {
  CommandOutput out;
  switch (sc.command) {
    case Command::kernel: out = cmd_kernel(sc, opts); break;
    case Command::reproduce: out = cmd_reproduce(sc, opts); break;
    case Command::hadamard: out = cmd_hadamard(sc, opts); break;
    case Command::limit: out = cmd_limit(sc, opts); break;
    case Command::residual: out = cmd_residual(sc, opts); break;
    case Command::selftest: out = cmd_selftest(opts); break;
  }
  out.report.command = command_name(sc.command);
  out.report.scenario = sc.source;
  return out;
}

}  // namespace kernel_lab
