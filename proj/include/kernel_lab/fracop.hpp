#pragma once

// Principal-value evaluation of the fractional Laplacian for fields
// extended by zero outside the domain, and the mollified Green function
// used to check (-Delta)^a v = rho_eps.

#include <functional>
#include <optional>
#include <vector>

#include "kernel_lab/geometry.hpp"
#include "kernel_lab/quadrature.hpp"
#include "kernel_lab/report.hpp"

namespace kernel_lab {

/// How a field behaves at the boundary: u ~ d^p with p > 0 (degenerate),
/// u ~ d^p with -1 < p < 0 (singular), or u vanishing identically near the
/// boundary (smooth_compact).
enum class BoundaryBehavior { degenerate, singular, smooth_compact };

/// Interior field extended by zero outside the open domain.
class SampledInteriorField {
 public:
  using Profile = std::function<double(Point)>;

  /// delta_min defaults to 0.05 R (degenerate, smooth_compact) or 0.2 R
  /// (singular).
  SampledInteriorField(ModelDomain domain, Profile profile, BoundaryBehavior behavior, double boundary_exponent,
                       std::optional<double> delta_min = std::nullopt);

  double operator()(Point p) const { return domain_.is_interior(p) ? profile_(p) : 0.0; }

  const ModelDomain& domain() const noexcept { return domain_; }
  BoundaryBehavior behavior() const noexcept { return behavior_; }
  double boundary_exponent() const noexcept { return exponent_; }
  double delta_min() const noexcept { return delta_min_; }

  /// Pointwise scaling, for linearity checks.
  SampledInteriorField scaled(double factor) const;

 private:
  ModelDomain domain_;
  Profile profile_;
  BoundaryBehavior behavior_;
  double exponent_;
  double delta_min_;
};

/// (R^2 - |x|^2)^p, degenerate for p > 0 and singular for -1 < p < 0.
SampledInteriorField power_profile(const ModelDomain& domain, double p);

/// (-Delta)^a u(x) = c_{N,a} p.v. int (u(x) - u(y)) |x-y|^{-N-2a} dy by a
/// symmetric near field on |h| <= h0 = min(d(x)/2, 0.1 R), graded far field
/// up to the exit of supp u, and the analytic tail beyond. In 2D the
/// integral is a trapezoid over directions of the 1D line integrals.
QuadResult frac_laplacian_apply(const SampledInteriorField& field, double a, Point x,
                                const QuadratureSpec& spec = {});

/// Scaled bump rho_eps(y - center), rho(z) = C exp(-1/(1-|z|^2)) with unit mass.
class MollifierSpec {
 public:
  /// Throws DomainError unless the support ball lies inside the domain.
  static MollifierSpec make(const ModelDomain& domain, Point center, double width);

  Point center() const noexcept { return center_; }
  double width() const noexcept { return width_; }
  int dim() const noexcept { return dim_; }
  double operator()(Point y) const;
  double peak() const;

 private:
  MollifierSpec(Point center, double width, int dim) : center_(center), width_(width), dim_(dim) {}
  Point center_;
  double width_;
  int dim_;
};

/// Normalization C_N of the unit bump.
double bump_normalization(int dim);

struct MollifiedGreenGrid {
  /// Chebyshev nodes in x (interval) or sampled positive radii (disk);
  /// 0 picks 512 for the interval and 64 for the disk.
  int radial_nodes = 0;
  int angular_nodes = 16;  ///< Fourier nodes in the angle (disk only)
};

/// v(z) = int G_a(z, y) rho_eps(y - x) dy evaluated directly at one point.
double mollified_green_value(const ModelDomain& domain, double a, const MollifierSpec& moll, Point z,
                             const QuadratureSpec& spec = {});

/// v sampled as v = (R^2-|z|^2)^a w(z) with w interpolated from a
/// Chebyshev (x Fourier) grid. Tagged boundary-degenerate with exponent a.
SampledInteriorField mollified_green(const ModelDomain& domain, double a, const MollifierSpec& moll,
                                     const QuadratureSpec& spec = {}, MollifiedGreenGrid grid = {});

/// lim_{t->0+} u(z - t nu(z)) / t^a by Richardson extrapolation in t.
double weighted_trace(const SampledInteriorField& field, double a, Point z, double t0 = 1e-4);

/// int rho_eps(y - x) gamma_0^a(G_a(y, .))(z) dy.
double mollified_trace_average(const ModelDomain& domain, double a, const MollifierSpec& moll, Point z,
                               const QuadratureSpec& spec = {});

/// Evaluates (-Delta)^a v at each point against rho_eps(. - x). Errors are
/// relative to the bump peak; pass when all are within tolerance.
Report residual_check(const ModelDomain& domain, double a, const MollifierSpec& moll,
                      const std::vector<Point>& points, const QuadratureSpec& spec = {},
                      double tolerance = 1e-2, MollifiedGreenGrid grid = {});

}  // namespace kernel_lab
