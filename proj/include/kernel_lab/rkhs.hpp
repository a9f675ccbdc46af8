#pragma once

// Poisson extensions and two-point kernels of the classical and fractional
// harmonic spaces. Elements of the fractional space are represented by
// their weighted boundary data phi = gamma_0^{a-1}(u).

#include <vector>

#include <Eigen/Dense>

#include "kernel_lab/boundary_calculus.hpp"
#include "kernel_lab/geometry.hpp"
#include "kernel_lab/report.hpp"

namespace kernel_lab {

struct RkhsOptions {
  /// Negative control: replace Gamma(a) Gamma(a+1) by 1.
  bool unit_representation_constant = false;
  /// Allowed disagreement between the spectral and direct routes,
  /// relative to max(1, |value|).
  double route_tolerance = 1e-12;
};

/// Gamma(a) Gamma(a+1), or 1 under the negative control.
double representation_factor(double a, const RkhsOptions& opts = {});

/// P_s[g](x) = <g, M^{-s} P(x,.)>_s, checked against int g P(x,.) dsigma.
/// Throws ConsistencyError when the routes disagree.
double poisson_extend_classical(double s, const BoundaryField& g, Point x, const RkhsOptions& opts = {});

/// Gamma(a)Gamma(a+1) <phi, M^{-2 theta} gamma_0^a G_a(x,.)>_{2 theta},
/// checked against Gamma(a)Gamma(a+1) int phi gamma_0^a G_a(x,.) dsigma.
double poisson_extend_fractional(double a, double s, const BoundaryField& phi, Point x,
                                 const RkhsOptions& opts = {});

/// The same extension with the boundary integral done exactly against the
/// trigonometric interpolant of phi (disk), or by the two-point sum
/// (interval). Stays accurate arbitrarily close to the boundary.
double poisson_extend_fractional_modal(double a, const BoundaryField& phi, Point x, const RkhsOptions& opts = {});

/// Riesz representer of evaluation at x as boundary data.
/// Classical: M^{-s} P(x,.). Fractional: Gamma(a)Gamma(a+1) M^{-2 theta} gamma_0^a G_a(x,.).
BoundaryField representer_classical(const GridPtr& grid, double s, Point x);
BoundaryField representer_fractional(const GridPtr& grid, double a, double s, Point x, const RkhsOptions& opts = {});

/// K_s(x,y) = int (M^{-s/2} P(x,.)) (M^{-s/2} P(y,.)) dsigma.
double kernel_classical(const GridPtr& grid, double s, Point x, Point y);

/// (1/(2 pi R)) sum_k (1+k^2/R^2)^{-s} (r1 r2 / R^2)^{|k|} cos(k Delta), disk only.
double kernel_classical_spectral_oracle(const ModelDomain& disk, double s, Point x, Point y);

/// K_{a,s}(x,y) = Gamma(a)^2 Gamma(a+1)^2 int (M^{-theta} psi_x)(M^{-theta} psi_y) dsigma,
/// psi_x = gamma_0^a G_a(x,.), theta = s/2 + a/2 + 1/4.
double kernel_fractional(const GridPtr& grid, double a, double s, Point x, Point y, const RkhsOptions& opts = {});

enum class KernelKind { classical, fractional };

struct KernelSpec {
  KernelKind kind = KernelKind::classical;
  GridPtr grid;
  double s = 0.0;
  double a = 1.0;  ///< ignored for classical kernels
  RkhsOptions options{};
};

struct KernelMatrix {
  KernelSpec spec;
  std::vector<Point> points;
  Eigen::MatrixXd entries;
  Eigen::VectorXd eigenvalues;  ///< ascending

  double min_eigenvalue() const { return eigenvalues.size() ? eigenvalues(0) : 0.0; }
  double max_eigenvalue() const { return eigenvalues.size() ? eigenvalues(eigenvalues.size() - 1) : 0.0; }
  /// min eig >= -tol * max eig.
  bool is_psd(double tol = 1e-10) const;
  /// Numerically singular: min eig <= tol * max eig (e.g. repeated points).
  bool is_singular(double tol = 1e-12) const;
};

/// Symmetric Gram matrix, each unordered pair computed once, with its
/// spectrum from a dense symmetric eigensolve.
KernelMatrix gram_matrix(const KernelSpec& spec, const std::vector<Point>& points);

/// |u(x) - <phi', K'_x>_{2 theta}| where u comes from
/// poisson_extend_fractional on phi's grid and the representer K'_x is
/// assembled on a second grid (alt_size nodes on the circle; default
/// twice the size of phi's grid).
double reproducing_residual(double a, double s, const BoundaryField& phi, Point x, int alt_size = 0,
                            const RkhsOptions& opts = {});

struct TraceRecovery {
  std::vector<double> distances;
  std::vector<int> nodes;                  ///< boundary grid indices probed
  std::vector<std::vector<double>> errors; ///< errors[node][distance]
  bool monotone = true;                    ///< errors decrease with distance at every node, or sit
                                           ///< below 1e-13 max|phi|
  double max_final_error = 0.0;
};

/// |u(z - d nu) d^{1-a} - phi(z)| at `node_count` evenly spaced boundary
/// nodes (all nodes on the interval), via the modal extension.
TraceRecovery trace_recovery(double a, const BoundaryField& phi, const std::vector<double>& distances,
                             int node_count = 8, const RkhsOptions& opts = {});

/// |K_{a,s}(x,y) - K_{s+3/2}(x,y)| for each a (increasing toward 1),
/// a monotone-decrease flag, a final relative bound 1e-2, and the formal
/// a = 1 substitution against the classical kernel.
Report limit_consistency(const GridPtr& grid, double s, Point x, Point y, const std::vector<double>& a_list);

}  // namespace kernel_lab
