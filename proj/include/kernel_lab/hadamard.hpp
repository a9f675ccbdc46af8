#pragma once

// Domain derivative of Green functions under normal boundary perturbations
// y = z + t alpha(z) nu(z). For dilations (1+t) Omega the speed is
// alpha = R and the perturbed Green function is known in closed form, so
// three routes can be compared: analytic derivative, finite differences,
// and the boundary-integral formula.

#include <utility>
#include <vector>

#include "kernel_lab/geometry.hpp"
#include "kernel_lab/report.hpp"

namespace kernel_lab {

/// Normal speed alpha on the boundary.
struct PerturbationField {
  BoundaryField alpha;

  /// alpha = R, the speed of the dilation R -> (1+t) R.
  static PerturbationField dilation(const GridPtr& grid);
  static PerturbationField constant(const GridPtr& grid, double value);
};

/// d/dt G_{(1+t) Omega}(x, y) at t = 0. a = 1 selects the classical Green
/// function, a in (0,1) the fractional one.
double dilation_derivative_exact(const ModelDomain& domain, double a, Point x, Point y);

/// (G_{(1+t)Omega} - G_{(1-t)Omega}) / (2t).
double dilation_derivative_fd(const ModelDomain& domain, double a, Point x, Point y, double t);

/// a = 1: int P(x,.) P(y,.) alpha dsigma.
/// a < 1: Gamma(1+a)^2 int gamma_0^a G_a(x,.) gamma_0^a G_a(y,.) alpha dsigma.
double hadamard_prediction(double a, Point x, Point y, const PerturbationField& alpha);

/// Steps used by default: {1e-2, 1e-3}.
std::vector<double> default_fd_steps();

struct HadamardRow {
  Point x;
  Point y;
  double exact = 0.0;
  double prediction = 0.0;
  std::vector<double> steps;
  std::vector<double> fd;        ///< per step
  std::vector<double> fd_error;  ///< |fd - exact| per step
  double extrapolated = 0.0;     ///< Richardson from the two smallest steps
  double order = 0.0;            ///< observed convergence order
};

struct HadamardTable {
  Report report;
  std::vector<HadamardRow> rows;
};

/// Exact, finite-difference and boundary-integral derivatives for each
/// pair under dilation, with pass flags at the given tolerances.
HadamardTable hadamard_report(const GridPtr& grid, double a, const std::vector<std::pair<Point, Point>>& pairs,
                              const std::vector<double>& steps = default_fd_steps(), double rel_tol = 1e-6);

}  // namespace kernel_lab
