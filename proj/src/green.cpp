#include "kernel_lab/green.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kernel_lab/errors.hpp"
#include "kernel_lab/specfun.hpp"

namespace kernel_lab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_point_dim(const ModelDomain& domain, Point p, const char* what) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || (domain.dim() == 1 && p.y != 0.0)) {
    throw DomainError(std::string(what) + ": point does not belong to the " + domain.name());
  }
}

void require_order(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("fractional order must lie in (0,1]");
}

}  // namespace

double green_classical(const ModelDomain& domain, Point x, Point y) {
  domain.require_interior(x, "green_classical");
  domain.require_interior(y, "green_classical");
  if (x == y) throw SingularityError("green_classical: x == y");
  const double r = domain.radius();
  if (domain.kind() == DomainKind::interval) {
    const double lo = std::min(x.x, y.x);
    const double hi = std::max(x.x, y.x);
    return (r + lo) * (r - hi) / (2.0 * r);
  }
  // Method of images, written symmetrically:
  // |y|^2 |x - y*|^2 = R^4 - 2 R^2 x.y + |x|^2 |y|^2.
  const double r2 = r * r;
  const double image = r2 * r2 - 2.0 * r2 * dot(x, y) + norm_sq(x) * norm_sq(y);
  return std::log(image / (r2 * norm_sq(x - y))) / (4.0 * kPi);
}

double green_fractional(const ModelDomain& domain, double a, Point x, Point y) {
  require_order(a);
  require_point_dim(domain, x, "green_fractional");
  require_point_dim(domain, y, "green_fractional");
  if (!domain.is_interior(x) || !domain.is_interior(y)) return 0.0;
  if (x == y) throw SingularityError("green_fractional: x == y");
  const int n = domain.dim();
  const double r2 = domain.radius() * domain.radius();
  const double dist2 = norm_sq(x - y);
  const double r0 = (r2 - norm_sq(x)) * (r2 - norm_sq(y)) / (r2 * dist2);
  return green_constant(n, a) * std::pow(dist2, a - 0.5 * n) * boundary_integral_B(r0, a, n);
}

double poisson_kernel_at(const ModelDomain& domain, Point x, Point z) {
  domain.require_interior(x, "poisson_kernel");
  const double r = domain.radius();
  if (domain.kind() == DomainKind::interval) return (r + (z.x > 0.0 ? x.x : -x.x)) / (2.0 * r);
  return (r * r - norm_sq(x)) / (2.0 * kPi * r * norm_sq(x - z));
}

BoundaryField poisson_kernel_classical(const GridPtr& grid, Point x) {
  const ModelDomain& domain = grid->domain();
  domain.require_interior(x, "poisson_kernel_classical");
  return BoundaryField::sample(grid, [&](Point z) { return poisson_kernel_at(domain, x, z); });
}

double fractional_trace_green_at(const ModelDomain& domain, double a, Point x, Point z) {
  require_order(a);
  domain.require_interior(x, "fractional_trace_green");
  const int n = domain.dim();
  const double r = domain.radius();
  return green_constant(n, a) / a * std::pow(2.0 / r, a) * std::pow(r * r - norm_sq(x), a) *
         std::pow(distance(x, z), -n);
}

BoundaryField fractional_trace_green(const GridPtr& grid, double a, Point x) {
  const ModelDomain& domain = grid->domain();
  require_order(a);
  domain.require_interior(x, "fractional_trace_green");
  return BoundaryField::sample(grid, [&](Point z) { return fractional_trace_green_at(domain, a, x, z); });
}

double exit_distance(const ModelDomain& domain, Point p, Point e) {
  const double r = domain.radius();
  if (domain.kind() == DomainKind::interval) return e.x > 0.0 ? r - p.x : r + p.x;
  const double pe = dot(p, e);
  return -pe + std::sqrt(pe * pe + (r * r - norm_sq(p)));
}

double torsion_reference(const ModelDomain& domain, double a, Point x) {
  domain.require_interior(x, "torsion_reference");
  const double r = domain.radius();
  return torsion_constant(domain.dim(), a) * std::pow(r * r - norm_sq(x), a);
}

QuadResult green_mass(const ModelDomain& domain, double a, Point x, const QuadratureSpec& spec) {
  require_order(a);
  domain.require_interior(x, "green_mass");
  const double r = domain.radius();
  const auto at_x = EndpointBehavior::power(domain.dim() == 1 ? std::min(2.0 * a - 1.0, 0.0) : 2.0 * a - 1.0);
  const auto at_boundary = EndpointBehavior::power(a);

  if (domain.kind() == DomainKind::interval) {
    auto g = [&](double y) { return green_fractional(domain, a, x, Point{y, 0.0}); };
    return converge(
        [&](Integrator& integ) {
          return integ.graded(g, -r, x.x, at_boundary, at_x) + integ.graded(g, x.x, r, at_x, at_boundary);
        },
        spec, "green_mass");
  }

  // Polar coordinates centred at x; trapezoid in the angle.
  const int m = spec.angles;
  return converge(
      [&](Integrator& integ) {
        double sum = 0.0;
        for (int j = 0; j < m; ++j) {
          const double phi = 2.0 * kPi * j / m;
          const Point e{std::cos(phi), std::sin(phi)};
          const double rho_max = exit_distance(domain, x, e);
          auto radial = [&](double rho) { return green_fractional(domain, a, x, x + rho * e) * rho; };
          sum += integ.graded(radial, 0.0, rho_max, at_x, at_boundary);
        }
        return sum * 2.0 * kPi / m;
      },
      spec, "green_mass");
}

}  // namespace kernel_lab
