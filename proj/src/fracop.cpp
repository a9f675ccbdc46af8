#include "kernel_lab/fracop.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "kernel_lab/errors.hpp"
#include "kernel_lab/green.hpp"
#include "kernel_lab/specfun.hpp"

namespace kernel_lab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_open_order(double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("fractional order must lie in (0,1)");
}

// Barycentric interpolation on first-kind Chebyshev nodes of [lo, hi].
class ChebyshevInterpolant {
 public:
  ChebyshevInterpolant(double lo, double hi, int n) : lo_(lo), hi_(hi), t_(n), w_(n) {
    for (int j = 0; j < n; ++j) {
      const double angle = (2.0 * j + 1.0) * kPi / (2.0 * n);
      t_[j] = std::cos(angle);
      w_[j] = ((j % 2 == 0) ? 1.0 : -1.0) * std::sin(angle);
    }
  }

  int size() const { return static_cast<int>(t_.size()); }
  double node(int j) const { return 0.5 * (lo_ + hi_) + 0.5 * (hi_ - lo_) * t_[j]; }

  // Barycentric weights for evaluation at x; an exact node hit yields a
  // unit vector.
  void weights_at(double x, std::vector<double>& out) const {
    const double t = (2.0 * x - lo_ - hi_) / (hi_ - lo_);
    out.assign(t_.size(), 0.0);
    double denom = 0.0;
    for (std::size_t j = 0; j < t_.size(); ++j) {
      const double diff = t - t_[j];
      if (diff == 0.0) {
        out.assign(t_.size(), 0.0);
        out[j] = 1.0;
        return;
      }
      out[j] = w_[j] / diff;
      denom += out[j];
    }
    for (auto& v : out) v /= denom;
  }

 private:
  double lo_;
  double hi_;
  std::vector<double> t_;
  std::vector<double> w_;
};

// w = v / (R^2 - |z|^2)^a on a Chebyshev grid (interval), or on a
// Chebyshev-in-r x Fourier-in-angle grid (disk). In the disk r runs over
// [-R, R] with w(-r, phi) = w(r, phi + pi), which keeps the interpolant
// smooth through the origin; only the positive radii are sampled.
class WeightedInterpolant {
 public:
  WeightedInterpolant(const ModelDomain& domain, double a, MollifiedGreenGrid grid)
      : WeightedInterpolant(domain, a, grid.radial_nodes > 0 ? grid.radial_nodes
                                       : domain.kind() == DomainKind::interval ? 512 : 64,
                            grid.angular_nodes) {}

  WeightedInterpolant(const ModelDomain& domain, double a, int radial, int angular)
      : domain_(domain),
        a_(a),
        cheb_(-domain.radius(), domain.radius(),
              domain.kind() == DomainKind::interval ? radial : 2 * radial),
        angular_(domain.kind() == DomainKind::disk ? angular : 1) {
    if (radial < 4) throw DomainError("mollified_green: need at least 4 radial nodes");
    if (domain.kind() == DomainKind::disk && (angular_ < 4 || angular_ % 2 != 0)) {
      throw DomainError("mollified_green: angular node count must be even and >= 4");
    }
  }

  std::vector<Point> sample_points() const {
    std::vector<Point> pts;
    if (domain_.kind() == DomainKind::interval) {
      for (int i = 0; i < cheb_.size(); ++i) pts.push_back({cheb_.node(i), 0.0});
      return pts;
    }
    // Nodes 0 .. n/2-1 are the positive radii.
    for (int i = 0; i < cheb_.size() / 2; ++i) {
      const double r = cheb_.node(i);
      for (int k = 0; k < angular_; ++k) {
        const double phi = 2.0 * kPi * k / angular_;
        pts.push_back({r * std::cos(phi), r * std::sin(phi)});
      }
    }
    return pts;
  }

  // Takes v at sample_points() in order.
  void set_values(const std::vector<Point>& pts, const std::vector<double>& v) {
    const double r2 = domain_.radius() * domain_.radius();
    std::vector<double> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / std::pow(r2 - norm_sq(pts[i]), a_);
    if (domain_.kind() == DomainKind::interval) {
      coeffs_ = std::move(w);
      return;
    }
    const int n = cheb_.size();
    const int m = angular_;
    // Node n-1-i is the reflection of node i.
    std::vector<double> full(static_cast<std::size_t>(n * m));
    for (int i = 0; i < n / 2; ++i) {
      for (int k = 0; k < m; ++k) {
        const double value = w[static_cast<std::size_t>(i * m + k)];
        full[static_cast<std::size_t>(i * m + k)] = value;
        full[static_cast<std::size_t>((n - 1 - i) * m + (k + m / 2) % m)] = value;
      }
    }
    // Real trigonometric coefficients per radial node:
    // [a0, a1, b1, ..., a_{m/2-1}, b_{m/2-1}, a_{m/2}].
    coeffs_.assign(static_cast<std::size_t>(n * m), 0.0);
    for (int i = 0; i < n; ++i) {
      const double* f = &full[static_cast<std::size_t>(i * m)];
      double* c = &coeffs_[static_cast<std::size_t>(i * m)];
      for (int j = 0; j < m; ++j) c[0] += f[j] / m;
      for (int k = 1; k < m / 2; ++k) {
        for (int j = 0; j < m; ++j) {
          const double phase = 2.0 * kPi * ((static_cast<long>(k) * j) % m) / m;
          c[2 * k - 1] += 2.0 * f[j] * std::cos(phase) / m;
          c[2 * k] += 2.0 * f[j] * std::sin(phase) / m;
        }
      }
      for (int j = 0; j < m; ++j) c[m - 1] += ((j % 2 == 0) ? 1.0 : -1.0) * f[j] / m;
    }
  }

  double w(Point p) const {
    thread_local std::vector<double> bary;
    if (domain_.kind() == DomainKind::interval) {
      cheb_.weights_at(p.x, bary);
      double sum = 0.0;
      for (std::size_t j = 0; j < bary.size(); ++j) sum += bary[j] * coeffs_[j];
      return sum;
    }
    const double r = norm(p);
    const double phi = std::atan2(p.y, p.x);
    const int m = angular_;
    thread_local std::vector<double> basis;
    basis.assign(static_cast<std::size_t>(m), 0.0);
    basis[0] = 1.0;
    for (int k = 1; k < m / 2; ++k) {
      basis[static_cast<std::size_t>(2 * k - 1)] = std::cos(k * phi);
      basis[static_cast<std::size_t>(2 * k)] = std::sin(k * phi);
    }
    basis[static_cast<std::size_t>(m - 1)] = std::cos(0.5 * m * phi);
    cheb_.weights_at(r, bary);
    double sum = 0.0;
    for (int i = 0; i < cheb_.size(); ++i) {
      if (bary[static_cast<std::size_t>(i)] == 0.0) continue;
      const double* c = &coeffs_[static_cast<std::size_t>(i * m)];
      double ring = 0.0;
      for (int k = 0; k < m; ++k) ring += c[k] * basis[static_cast<std::size_t>(k)];
      sum += bary[static_cast<std::size_t>(i)] * ring;
    }
    return sum;
  }

  double v(Point p) const {
    const double r2 = domain_.radius() * domain_.radius();
    return std::pow(r2 - norm_sq(p), a_) * w(p);
  }

 private:
  ModelDomain domain_;
  double a_;
  ChebyshevInterpolant cheb_;
  int angular_;
  std::vector<double> coeffs_;
};

// Line integral int_0^inf (2u(x) - u(x+rho e) - u(x-rho e)) rho^{-1-2a} d rho.
double line_integral(const SampledInteriorField& u, double a, Point x, Point e, double h0, Integrator& integ) {
  // Below ~h0 2^-14 the symmetric difference is dominated by rounding.
  constexpr int kNearLayers = 14;
  const double ux = u(x);
  const double power = -1.0 - 2.0 * a;
  auto near = [&](double rho) { return (2.0 * ux - u(x + rho * e) - u(x - rho * e)) * std::pow(rho, power); };
  double value =
      integ.graded(near, 0.0, h0, EndpointBehavior::power(1.0 - 2.0 * a), EndpointBehavior::regular(), kNearLayers);
  value += ux * std::pow(h0, -2.0 * a) / a;

  const auto edge = u.behavior() == BoundaryBehavior::smooth_compact ? EndpointBehavior::regular()
                                                                     : EndpointBehavior::power(u.boundary_exponent());
  const Point back = -1.0 * e;
  for (const Point dir : {e, back}) {
    const double exit = exit_distance(u.domain(), x, dir);
    auto far = [&](double rho) { return u(x + rho * dir) * std::pow(rho, power); };
    value -= integ.graded(far, h0, exit, EndpointBehavior::regular(), edge);
  }
  return value;
}

// Exit distance from p along e out of the ball |y - c| < rad (p inside).
double ball_exit(Point p, Point e, Point c, double rad) {
  const Point q = p - c;
  const double qe = dot(q, e);
  return -qe + std::sqrt(std::max(0.0, qe * qe + rad * rad - norm_sq(q)));
}

}  // namespace

SampledInteriorField::SampledInteriorField(ModelDomain domain, Profile profile, BoundaryBehavior behavior,
                                           double boundary_exponent, std::optional<double> delta_min)
    : domain_(domain), profile_(std::move(profile)), behavior_(behavior), exponent_(boundary_exponent) {
  if (behavior == BoundaryBehavior::degenerate && !(boundary_exponent > 0.0)) {
    throw DomainError("degenerate fields need a positive boundary exponent");
  }
  if (behavior == BoundaryBehavior::singular && !(boundary_exponent > -1.0 && boundary_exponent < 0.0)) {
    throw DomainError("singular fields need a boundary exponent in (-1, 0)");
  }
  const double fallback = (behavior == BoundaryBehavior::singular ? 0.2 : 0.05) * domain.radius();
  delta_min_ = delta_min.value_or(fallback);
}

SampledInteriorField SampledInteriorField::scaled(double factor) const {
  auto inner = profile_;
  return SampledInteriorField(domain_, [inner, factor](Point p) { return factor * inner(p); }, behavior_, exponent_,
                              delta_min_);
}

SampledInteriorField power_profile(const ModelDomain& domain, double p) {
  const double r2 = domain.radius() * domain.radius();
  const auto behavior = p > 0.0 ? BoundaryBehavior::degenerate : BoundaryBehavior::singular;
  return SampledInteriorField(domain, [r2, p](Point y) { return std::pow(r2 - norm_sq(y), p); }, behavior, p);
}

QuadResult frac_laplacian_apply(const SampledInteriorField& field, double a, Point x, const QuadratureSpec& spec) {
  require_open_order(a);
  const ModelDomain& domain = field.domain();
  domain.require_interior(x, "frac_laplacian_apply");
  const double d = domain.distance_to_boundary(x);
  if (d < field.delta_min()) {
    throw DomainError("frac_laplacian_apply: point is closer to the boundary than delta_min");
  }
  const double h0 = std::min(0.5 * d, 0.1 * domain.radius());
  const double c = frac_laplacian_constant(domain.dim(), a);

  if (domain.kind() == DomainKind::interval) {
    return converge([&](Integrator& integ) { return c * line_integral(field, a, x, Point{1.0, 0.0}, h0, integ); },
                    spec, "frac_laplacian_apply");
  }
  const int m = spec.angles;
  return converge(
      [&](Integrator& integ) {
        double sum = 0.0;
        for (int j = 0; j < m; ++j) {
          const double phi = kPi * j / m;
          sum += line_integral(field, a, x, Point{std::cos(phi), std::sin(phi)}, h0, integ);
        }
        return c * sum * kPi / m;
      },
      spec, "frac_laplacian_apply");
}

double bump_normalization(int dim) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;
  // The profile is flat to all orders at t = 1, so a shallow adaptive
  // Kronrod rule reaches full precision.
  auto profile = [](double t2) { return t2 < 1.0 ? std::exp(-1.0 / (1.0 - t2)) : 0.0; };
  if (dim == 1) {
    static const double c1 = 1.0 / (2.0 * Rule::integrate([&](double t) { return profile(t * t); }, 0.0, 1.0, 12, 1e-14));
    return c1;
  }
  if (dim == 2) {
    static const double c2 =
        1.0 / (2.0 * kPi * Rule::integrate([&](double r) { return profile(r * r) * r; }, 0.0, 1.0, 12, 1e-14));
    return c2;
  }
  throw DomainError("bump_normalization: dimension must be 1 or 2");
}

MollifierSpec MollifierSpec::make(const ModelDomain& domain, Point center, double width) {
  domain.require_interior(center, "MollifierSpec");
  if (!(width > 0.0)) throw DomainError("mollifier width must be positive");
  if (norm(center) + width >= domain.radius()) throw DomainError("mollifier support must lie inside the domain");
  return {center, width, domain.dim()};
}

double MollifierSpec::operator()(Point y) const {
  const double t2 = norm_sq(y - center_) / (width_ * width_);
  if (t2 >= 1.0) return 0.0;
  return bump_normalization(dim_) * std::exp(-1.0 / (1.0 - t2)) / std::pow(width_, dim_);
}

double MollifierSpec::peak() const { return bump_normalization(dim_) * std::exp(-1.0) / std::pow(width_, dim_); }

double mollified_green_value(const ModelDomain& domain, double a, const MollifierSpec& moll, Point z,
                             const QuadratureSpec& spec) {
  require_open_order(a);
  const Point c = moll.center();
  const double eps = moll.width();
  const auto at_z = EndpointBehavior::power(domain.dim() == 1 ? std::min(2.0 * a - 1.0, 0.0) : 2.0 * a - 1.0);
  const auto smooth = EndpointBehavior::regular();

  if (domain.kind() == DomainKind::interval) {
    auto f = [&](double y) {
      const Point p{y, 0.0};
      return green_fractional(domain, a, z, p) * moll(p);
    };
    const double lo = c.x - eps;
    const double hi = c.x + eps;
    return converge(
               [&](Integrator& integ) {
                 if (z.x > lo && z.x < hi) return integ.graded(f, lo, z.x, smooth, at_z) + integ.graded(f, z.x, hi, at_z, smooth);
                 return integ.graded(f, lo, hi, smooth, smooth);
               },
               spec, "mollified_green")
        .value;
  }

  const int m = spec.angles;
  const bool inside = distance(z, c) < eps;
  return converge(
             [&](Integrator& integ) {
               double sum = 0.0;
               for (int j = 0; j < m; ++j) {
                 const double phi = 2.0 * kPi * j / m;
                 const Point e{std::cos(phi), std::sin(phi)};
                 if (inside) {
                   auto f = [&](double rho) {
                     const Point y = z + rho * e;
                     return green_fractional(domain, a, z, y) * moll(y) * rho;
                   };
                   sum += integ.graded(f, 0.0, ball_exit(z, e, c, eps), at_z, smooth);
                 } else {
                   auto f = [&](double rho) {
                     const Point y = c + rho * e;
                     return green_fractional(domain, a, z, y) * moll(y) * rho;
                   };
                   sum += integ.graded(f, 0.0, eps, smooth, smooth);
                 }
               }
               return sum * 2.0 * kPi / m;
             },
             spec, "mollified_green")
      .value;
}

SampledInteriorField mollified_green(const ModelDomain& domain, double a, const MollifierSpec& moll,
                                     const QuadratureSpec& spec, MollifiedGreenGrid grid) {
  require_open_order(a);
  auto interp = std::make_shared<WeightedInterpolant>(domain, a, grid);
  const auto pts = interp->sample_points();
  std::vector<double> values(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) values[i] = mollified_green_value(domain, a, moll, pts[i], spec);
  interp->set_values(pts, values);
  return SampledInteriorField(domain, [interp](Point p) { return interp->v(p); }, BoundaryBehavior::degenerate, a);
}

double weighted_trace(const SampledInteriorField& field, double a, Point z, double t0) {
  const Point nu = field.domain().outward_normal(z);
  auto g = [&](double t) { return field(z - t * nu) / std::pow(t, a); };
  const double g1 = g(t0);
  const double g2 = g(0.5 * t0);
  const double g4 = g(0.25 * t0);
  const double r1 = 2.0 * g2 - g1;
  const double r2 = 2.0 * g4 - g2;
  return (4.0 * r2 - r1) / 3.0;
}

double mollified_trace_average(const ModelDomain& domain, double a, const MollifierSpec& moll, Point z,
                               const QuadratureSpec& spec) {
  const Point c = moll.center();
  const double eps = moll.width();
  const auto smooth = EndpointBehavior::regular();
  if (domain.kind() == DomainKind::interval) {
    auto f = [&](double y) {
      const Point p{y, 0.0};
      return moll(p) * fractional_trace_green_at(domain, a, p, z);
    };
    return converge([&](Integrator& integ) { return integ.graded(f, c.x - eps, c.x + eps, smooth, smooth); }, spec,
                    "mollified_trace_average")
        .value;
  }
  const int m = spec.angles;
  return converge(
             [&](Integrator& integ) {
               double sum = 0.0;
               for (int j = 0; j < m; ++j) {
                 const double phi = 2.0 * kPi * j / m;
                 const Point e{std::cos(phi), std::sin(phi)};
                 auto f = [&](double rho) {
                   const Point y = c + rho * e;
                   return moll(y) * fractional_trace_green_at(domain, a, y, z) * rho;
                 };
                 sum += integ.graded(f, 0.0, eps, smooth, smooth);
               }
               return sum * 2.0 * kPi / m;
             },
             spec, "mollified_trace_average")
      .value;
}

Report residual_check(const ModelDomain& domain, double a, const MollifierSpec& moll, const std::vector<Point>& points,
                      const QuadratureSpec& spec, double tolerance, MollifiedGreenGrid grid) {
  Report report;
  report.command = "residual_check";
  const auto v = mollified_green(domain, a, moll, spec, grid);
  const double peak = moll.peak();
  std::int64_t evaluations = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point p = points[i];
    domain.require_interior(p, "residual_check");
    const auto applied = frac_laplacian_apply(v, a, p, spec);
    evaluations += applied.evaluations;
    auto rec = CheckRecord::compare("residual[" + std::to_string(i) + "]", applied.value, moll(p), tolerance,
                                    ToleranceKind::relative, peak);
    worst = std::max(worst, rec.rel_error);
    report.add(std::move(rec));
  }
  report.metadata["a"] = a;
  report.metadata["mollifier_center"] = {moll.center().x, moll.center().y};
  report.metadata["mollifier_width"] = moll.width();
  report.metadata["bump_peak"] = peak;
  report.metadata["max_relative_deviation"] = worst;
  report.metadata["operator_evaluations"] = evaluations;
  return report;
}

}  // namespace kernel_lab
