#include "kernel_lab/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "kernel_lab/errors.hpp"
#include "kernel_lab/green.hpp"
#include "kernel_lab/specfun.hpp"
#include "kernel_lab/boundary_calculus.hpp"

namespace kernel_lab {

namespace {

double green_any(const ModelDomain& domain, double a, Point x, Point y) {
  return a == 1.0 ? green_classical(domain, x, y) : green_fractional(domain, a, x, y);
}

ModelDomain scaled(const ModelDomain& domain, double factor) {
  const double r = domain.radius() * factor;
  return domain.kind() == DomainKind::interval ? ModelDomain::interval(r) : ModelDomain::disk(r);
}

std::string point_label(Point p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.6g,%.6g)", p.x, p.y);
  return buf;
}

}  // namespace

PerturbationField PerturbationField::dilation(const GridPtr& grid) {
  const double r = grid->domain().radius();
  return {BoundaryField::sample(grid, [r](Point) { return r; })};
}

PerturbationField PerturbationField::constant(const GridPtr& grid, double value) {
  return {BoundaryField::sample(grid, [value](Point) { return value; })};
}

double dilation_derivative_exact(const ModelDomain& domain, double a, Point x, Point y) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("order must lie in (0,1]");
  domain.require_interior(x, "dilation_derivative_exact");
  domain.require_interior(y, "dilation_derivative_exact");
  if (x == y) throw SingularityError("dilation_derivative_exact: x == y");
  const double r = domain.radius();
  const double r2 = r * r;

  if (a == 1.0) {
    if (domain.kind() == DomainKind::interval) {
      // G = (R+lo)(R-hi)/(2R)
      const double lo = std::min(x.x, y.x);
      const double hi = std::max(x.x, y.x);
      const double dg = ((r - hi) + (r + lo)) / (2.0 * r) - (r + lo) * (r - hi) / (2.0 * r2);
      return r * dg;
    }
    // G = (1/4pi) log(Q / (R^2 |x-y|^2)), Q = R^4 - 2R^2 x.y + |x|^2|y|^2
    const double xy = dot(x, y);
    const double q = r2 * r2 - 2.0 * r2 * xy + norm_sq(x) * norm_sq(y);
    const double dg = ((4.0 * r2 * r - 4.0 * r * xy) / q - 2.0 / r) / (4.0 * std::numbers::pi);
    return r * dg;
  }

  const int n = domain.dim();
  const double dist2 = norm_sq(x - y);
  const double ax = r2 - norm_sq(x);
  const double ay = r2 - norm_sq(y);
  const double r0 = ax * ay / (r2 * dist2);
  const double dr0 = (2.0 * r * ay + 2.0 * r * ax) / (r2 * dist2) - 2.0 * ax * ay / (r2 * r * dist2);
  const double dg = green_constant(n, a) * std::pow(dist2, a - 0.5 * n) * boundary_integral_B_derivative(r0, a, n) * dr0;
  return r * dg;
}

double dilation_derivative_fd(const ModelDomain& domain, double a, Point x, Point y, double t) {
  if (!(t > 0.0)) throw DomainError("finite-difference step must be positive");
  const auto grown = scaled(domain, 1.0 + t);
  const auto shrunk = scaled(domain, 1.0 - t);
  shrunk.require_interior(x, "dilation_derivative_fd");
  shrunk.require_interior(y, "dilation_derivative_fd");
  return (green_any(grown, a, x, y) - green_any(shrunk, a, x, y)) / (2.0 * t);
}

double hadamard_prediction(double a, Point x, Point y, const PerturbationField& alpha) {
  const GridPtr& grid = alpha.alpha.grid;
  if (a == 1.0) {
    auto px = poisson_kernel_classical(grid, x);
    const auto py = poisson_kernel_classical(grid, y);
    for (int i = 0; i < px.size(); ++i) px[i] *= py[i];
    return boundary_pairing(px, alpha.alpha);
  }
  if (!(a > 0.0 && a < 1.0)) throw DomainError("order must lie in (0,1]");
  auto gx = fractional_trace_green(grid, a, x);
  const auto gy = fractional_trace_green(grid, a, y);
  for (int i = 0; i < gx.size(); ++i) gx[i] *= gy[i];
  const double g = gamma_fn(1.0 + a);
  return g * g * boundary_pairing(gx, alpha.alpha);
}

std::vector<double> default_fd_steps() { return {1e-2, 1e-3}; }

HadamardTable hadamard_report(const GridPtr& grid, double a, const std::vector<std::pair<Point, Point>>& pairs,
                              const std::vector<double>& steps, double rel_tol) {
  HadamardTable out;
  Report& report = out.report;
  report.command = "hadamard_report";
  const ModelDomain& domain = grid->domain();
  const auto alpha = PerturbationField::dilation(grid);
  report.metadata["perturbation"] = "dilation";
  report.metadata["alpha"] = domain.radius();
  report.metadata["a"] = a;
  report.metadata["steps"] = steps;

  std::vector<double> sorted = steps;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [x, y] = pairs[k];
    HadamardRow row;
    row.x = x;
    row.y = y;
    row.exact = dilation_derivative_exact(domain, a, x, y);
    row.prediction = hadamard_prediction(a, x, y, alpha);
    row.steps = sorted;
    for (const double t : sorted) {
      const double fd = dilation_derivative_fd(domain, a, x, y, t);
      row.fd.push_back(fd);
      row.fd_error.push_back(std::abs(fd - row.exact));
    }
    const std::string tag = "pair[" + std::to_string(k) + "] " + point_label(x) + "-" + point_label(y);
    if (sorted.size() >= 2) {
      const std::size_t i = sorted.size() - 2;
      const double ratio = sorted[i] / sorted[i + 1];
      row.extrapolated = (ratio * ratio * row.fd[i + 1] - row.fd[i]) / (ratio * ratio - 1.0);
      if (row.fd_error[i + 1] > 0.0 && row.fd_error[i] > 0.0) {
        row.order = std::log(row.fd_error[i] / row.fd_error[i + 1]) / std::log(ratio);
      }
    } else if (sorted.size() == 1) {
      row.extrapolated = row.fd[0];
    }
    const double scale = std::max(std::abs(row.exact), 1e-300);
    report.add(CheckRecord::compare(tag + " prediction_vs_exact", row.prediction, row.exact, rel_tol,
                                    ToleranceKind::relative, scale));
    if (!sorted.empty()) {
      report.add(CheckRecord::compare(tag + " fd_extrapolated_vs_exact", row.extrapolated, row.exact, rel_tol,
                                      ToleranceKind::relative, scale));
    }
    report.add(CheckRecord::flag(tag + " nonnegative", row.exact >= 0.0 && row.prediction >= 0.0, row.exact));
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace kernel_lab
