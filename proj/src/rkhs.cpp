#include "kernel_lab/rkhs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kernel_lab/errors.hpp"
#include "kernel_lab/green.hpp"
#include "kernel_lab/specfun.hpp"

namespace kernel_lab {

namespace {

constexpr double kPi = std::numbers::pi;

// Spectral route <g, M^{-t} h>_t and direct route int g h dsigma; returns
// the direct value after checking agreement.
double two_route_pairing(const BoundaryField& g, const BoundaryField& h, double t, const RkhsOptions& opts,
                         const char* what) {
  require_same_grid(g, h);
  const double spectral = sobolev_inner(to_spectrum(g), apply_M_power(to_spectrum(h), -t), t);
  const double direct = boundary_pairing(g, h);
  if (std::abs(spectral - direct) > opts.route_tolerance * std::max(1.0, std::abs(direct))) {
    throw ConsistencyError(std::string(what) + ": spectral and direct routes disagree", spectral, direct);
  }
  return direct;
}

}  // namespace

double representation_factor(double a, const RkhsOptions& opts) {
  return opts.unit_representation_constant ? 1.0 : representation_constant(a);
}

double poisson_extend_classical(double s, const BoundaryField& g, Point x, const RkhsOptions& opts) {
  const auto p = poisson_kernel_classical(g.grid, x);
  return two_route_pairing(g, p, s, opts, "poisson_extend_classical");
}

double poisson_extend_fractional(double a, double s, const BoundaryField& phi, Point x, const RkhsOptions& opts) {
  const auto params = FracParams::make(a, s);
  const auto psi = fractional_trace_green(phi.grid, a, x);
  return representation_factor(a, opts) *
         two_route_pairing(phi, psi, 2.0 * params.theta(), opts, "poisson_extend_fractional");
}

double poisson_extend_fractional_modal(double a, const BoundaryField& phi, Point x, const RkhsOptions& opts) {
  const ModelDomain& domain = phi.grid->domain();
  domain.require_interior(x, "poisson_extend_fractional_modal");
  const double factor = representation_factor(a, opts);
  if (domain.kind() == DomainKind::interval) {
    const auto psi = fractional_trace_green(phi.grid, a, x);
    return factor * boundary_pairing(phi, psi);
  }
  // int e_k psi_x dsigma = (kappa/a)(2/R)^a (R^2-r^2)^{a-1} sqrt(2 pi R) (r/R)^{|k|} e^{i k theta_x}
  const double r = domain.radius();
  const double rx = norm(x);
  const double theta_x = std::atan2(x.y, x.x);
  const double ratio = rx / r;
  const Spectrum spec = to_spectrum(phi);
  const int n = spec.size();
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const int k = spec.mode(i);
    const double decay = std::pow(ratio, std::abs(k));
    if (decay == 0.0 && k != 0) continue;
    const auto c = spec.coeffs[static_cast<std::size_t>(i)];
    if (k == n / 2) {
      sum += decay * c.real() * std::cos(k * theta_x);
    } else {
      sum += decay * (c * std::polar(1.0, k * theta_x)).real();
    }
  }
  const double prefactor = green_constant(2, a) / a * std::pow(2.0 / r, a) * std::pow(r * r - rx * rx, a - 1.0) *
                           std::sqrt(2.0 * kPi * r);
  return factor * prefactor * sum;
}

BoundaryField representer_classical(const GridPtr& grid, double s, Point x) {
  return apply_M_power(poisson_kernel_classical(grid, x), -s);
}

BoundaryField representer_fractional(const GridPtr& grid, double a, double s, Point x, const RkhsOptions& opts) {
  const auto params = FracParams::make(a, s);
  auto rep = apply_M_power(fractional_trace_green(grid, a, x), -2.0 * params.theta());
  const double factor = representation_factor(a, opts);
  for (auto& v : rep.values) v *= factor;
  return rep;
}

double kernel_classical(const GridPtr& grid, double s, Point x, Point y) {
  const auto px = to_spectrum(poisson_kernel_classical(grid, x));
  const auto py = to_spectrum(poisson_kernel_classical(grid, y));
  return sobolev_inner(px, py, -s);
}

double kernel_classical_spectral_oracle(const ModelDomain& disk, double s, Point x, Point y) {
  if (disk.kind() != DomainKind::disk) throw DomainError("spectral oracle is defined on the disk only");
  disk.require_interior(x, "kernel_classical_spectral_oracle");
  disk.require_interior(y, "kernel_classical_spectral_oracle");
  const double r = disk.radius();
  const double rho = norm(x) * norm(y) / (r * r);
  const double delta = std::atan2(x.y, x.x) - std::atan2(y.y, y.x);
  double sum = 1.0;
  if (rho > 0.0) {
    double power = 1.0;
    for (int k = 1; k < 100000; ++k) {
      power *= rho;
      const double term = 2.0 * std::pow(1.0 + k * k / (r * r), -s) * power;
      sum += term * std::cos(k * delta);
      if (std::abs(term) < 1e-16 * std::abs(sum) && power < 1e-16) break;
    }
  }
  return sum / (2.0 * kPi * r);
}

double kernel_fractional(const GridPtr& grid, double a, double s, Point x, Point y, const RkhsOptions& opts) {
  const auto params = FracParams::make(a, s);
  const auto px = to_spectrum(fractional_trace_green(grid, a, x));
  const auto py = to_spectrum(fractional_trace_green(grid, a, y));
  const double factor = representation_factor(a, opts);
  return factor * factor * sobolev_inner(px, py, -2.0 * params.theta());
}

bool KernelMatrix::is_psd(double tol) const {
  if (eigenvalues.size() == 0) return true;
  return min_eigenvalue() >= -tol * std::abs(max_eigenvalue());
}

bool KernelMatrix::is_singular(double tol) const {
  if (eigenvalues.size() == 0) return false;
  return std::abs(min_eigenvalue()) <= tol * std::abs(max_eigenvalue());
}

KernelMatrix gram_matrix(const KernelSpec& spec, const std::vector<Point>& points) {
  if (!spec.grid) throw ContractError("gram_matrix: kernel spec has no grid");
  const auto n = static_cast<Eigen::Index>(points.size());
  double order = -spec.s;
  double factor = 1.0;
  std::vector<Spectrum> reps;
  reps.reserve(points.size());
  if (spec.kind == KernelKind::fractional) {
    const auto params = FracParams::make(spec.a, spec.s);
    order = -2.0 * params.theta();
    factor = representation_factor(spec.a, spec.options);
    factor *= factor;
    for (const auto& p : points) reps.push_back(to_spectrum(fractional_trace_green(spec.grid, spec.a, p)));
  } else {
    for (const auto& p : points) reps.push_back(to_spectrum(poisson_kernel_classical(spec.grid, p)));
  }
  KernelMatrix out{spec, points, Eigen::MatrixXd::Zero(n, n), Eigen::VectorXd()};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = factor * sobolev_inner(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)], order);
      out.entries(i, j) = v;
      out.entries(j, i) = v;
    }
  }
  if (n > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(out.entries, Eigen::EigenvaluesOnly);
    out.eigenvalues = solver.eigenvalues();
  }
  return out;
}

double reproducing_residual(double a, double s, const BoundaryField& phi, Point x, int alt_size,
                            const RkhsOptions& opts) {
  const auto params = FracParams::make(a, s);
  const double u = poisson_extend_fractional(a, s, phi, x, opts);
  const ModelDomain& domain = phi.grid->domain();
  const int m = alt_size > 0 ? alt_size : 2 * phi.grid->size();
  const auto alt_grid = BoundaryGrid::make(domain, m);
  const auto phi_alt = resample(phi, alt_grid);
  const auto rep = representer_fractional(alt_grid, a, s, x, opts);
  const double pairing = sobolev_inner(phi_alt, rep, 2.0 * params.theta());
  return std::abs(u - pairing);
}

TraceRecovery trace_recovery(double a, const BoundaryField& phi, const std::vector<double>& distances, int node_count,
                             const RkhsOptions& opts) {
  TraceRecovery out;
  out.distances = distances;
  const auto& grid = *phi.grid;
  const int n = grid.size();
  if (grid.domain().kind() == DomainKind::interval || node_count >= n) {
    for (int i = 0; i < n; ++i) out.nodes.push_back(i);
  } else {
    for (int j = 0; j < node_count; ++j) out.nodes.push_back(j * n / node_count);
  }
  // Errors at rounding level (e.g. where phi vanishes by symmetry) count
  // as converged.
  double scale = 0.0;
  for (const double v : phi.values) scale = std::max(scale, std::abs(v));
  const double floor = 1e-13 * std::max(scale, 1.0);
  for (const int i : out.nodes) {
    const Point z = grid.node(i);
    const Point nu = grid.domain().outward_normal(z);
    std::vector<double> errs;
    for (const double d : distances) {
      const double u = poisson_extend_fractional_modal(a, phi, z - d * nu, opts);
      errs.push_back(std::abs(u * std::pow(d, 1.0 - a) - phi[i]));
    }
    for (std::size_t k = 1; k < errs.size(); ++k) {
      if (!(errs[k] < errs[k - 1] || errs[k] <= floor)) out.monotone = false;
    }
    if (!errs.empty()) out.max_final_error = std::max(out.max_final_error, errs.back());
    out.errors.push_back(std::move(errs));
  }
  return out;
}

Report limit_consistency(const GridPtr& grid, double s, Point x, Point y, const std::vector<double>& a_list) {
  Report report;
  report.command = "limit_consistency";
  const double reference = kernel_classical(grid, s + 1.5, x, y);
  std::vector<double> errors;
  for (const double a : a_list) {
    const double value = kernel_fractional(grid, a, s, x, y);
    errors.push_back(std::abs(value - reference));
    auto rec = CheckRecord::compare("K_a=" + std::to_string(a), value, reference, HUGE_VAL, ToleranceKind::absolute);
    report.add(std::move(rec));
  }
  bool monotone = true;
  for (std::size_t k = 1; k < errors.size(); ++k) {
    if (!(errors[k] < errors[k - 1])) monotone = false;
  }
  report.add(CheckRecord::flag("strictly_decreasing", monotone, static_cast<double>(errors.size())));
  if (!errors.empty()) {
    report.add(CheckRecord::compare("final_relative_error", kernel_fractional(grid, a_list.back(), s, x, y), reference,
                                    1e-2, ToleranceKind::relative));
  }
  report.add(CheckRecord::compare("formal_a_equals_1", kernel_fractional(grid, 1.0, s, x, y), reference, 1e-10,
                                  ToleranceKind::absolute));
  report.metadata["reference_K_s_plus_3_2"] = reference;
  report.metadata["errors"] = errors;
  report.metadata["a_list"] = a_list;
  return report;
}

}  // namespace kernel_lab
