#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kernel_lab/errors.hpp"
#include "kernel_lab/green.hpp"
#include "kernel_lab/boundary_calculus.hpp"
#include "kernel_lab/specfun.hpp"

using namespace kernel_lab;
using std::numbers::pi;

namespace {

// Five-point Laplacian of y -> G(x, y).
double fd_laplacian(const ModelDomain& d, Point x, Point y, double h) {
  auto g = [&](Point p) { return green_classical(d, x, p); };
  return (g({y.x + h, y.y}) + g({y.x - h, y.y}) + g({y.x, y.y + h}) + g({y.x, y.y - h}) - 4.0 * g(y)) / (h * h);
}

// lim_{t->0} f(t)/t^p by two Richardson steps on t, t/2, t/4.
template <class F>
double weighted_limit(F f, double p, double t) {
  const double g1 = f(t) / std::pow(t, p);
  const double g2 = f(0.5 * t) / std::pow(0.5 * t, p);
  const double g4 = f(0.25 * t) / std::pow(0.25 * t, p);
  return (4.0 * (2.0 * g4 - g2) - (2.0 * g2 - g1)) / 3.0;
}

}  // namespace

TEST_CASE("classical Green function of the disk") {
  const auto disk = ModelDomain::disk(2.0);
  // G(0, y) = -(1/2 pi) log(|y|/R).
  for (double r : {0.1, 0.7, 1.9}) {
    CHECK(green_classical(disk, {0.0, 0.0}, {0.0, r}) == doctest::Approx(-std::log(r / 2.0) / (2.0 * pi)).epsilon(1e-14));
  }
  const Point x{0.3, -0.4};
  for (const Point y : {Point{1.0, 0.2}, Point{-0.5, 1.1}, Point{0.0, -1.5}}) {
    CHECK(std::abs(fd_laplacian(disk, x, y, 1e-3)) < 1e-5);
    CHECK(green_classical(disk, x, y) == doctest::Approx(green_classical(disk, y, x)).epsilon(1e-14));
  }
  // Vanishes on the boundary.
  CHECK(std::abs(green_classical(disk, x, {2.0 * std::cos(0.3) * (1 - 1e-12), 2.0 * std::sin(0.3) * (1 - 1e-12)})) < 1e-10);
}

TEST_CASE("classical Green function of the interval") {
  const auto iv = ModelDomain::interval(1.0);
  CHECK(green_classical(iv, {0.0, 0.0}, {0.5, 0.0}) == doctest::Approx(0.25));
  // Piecewise linear with a unit drop in slope at x.
  const double x = 0.2, h = 1e-6;
  auto g = [&](double y) { return green_classical(iv, {x, 0.0}, {y, 0.0}); };
  const double left = (g(x - h) - g(x - 2 * h)) / h;
  const double right = (g(x + 2 * h) - g(x + h)) / h;
  CHECK(left - right == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("Green function errors") {
  const auto disk = ModelDomain::disk(1.0);
  CHECK_THROWS_AS(green_classical(disk, {0.1, 0.1}, {0.1, 0.1}), SingularityError);
  CHECK_THROWS_AS(green_classical(disk, {1.1, 0.0}, {0.1, 0.1}), DomainError);
  CHECK_THROWS_AS(green_classical(ModelDomain::interval(1.0), {0.1, 0.2}, {0.3, 0.0}), DomainError);
  CHECK_THROWS_AS(green_fractional(disk, 0.5, {0.2, 0.0}, {0.2, 0.0}), SingularityError);
  CHECK_THROWS_AS(green_fractional(disk, 0.0, {0.2, 0.0}, {0.0, 0.0}), DomainError);
  CHECK(green_fractional(disk, 0.5, {0.2, 0.0}, {1.5, 0.0}) == 0.0);
}

TEST_CASE("fractional Green function closed value and a = 1 limit") {
  const auto iv = ModelDomain::interval(1.0);
  // r0 = 3 at (0, 1/2): kappa B(3) = (1/2pi) 2 asinh(sqrt 3) = ln(2 + sqrt 3)/pi.
  CHECK(green_fractional(iv, 0.5, {0.0, 0.0}, {0.5, 0.0}) == doctest::Approx(std::log(2.0 + std::sqrt(3.0)) / pi).epsilon(1e-14));
  const auto disk = ModelDomain::disk(1.5);
  for (const auto& [x, y] : {std::pair{Point{0.0, 0.0}, Point{0.5, 0.0}}, std::pair{Point{0.3, 0.9}, Point{-1.0, 0.2}}}) {
    CHECK(green_fractional(disk, 1.0, x, y) == doctest::Approx(green_classical(disk, x, y)).epsilon(1e-12));
  }
  const auto iv2 = ModelDomain::interval(2.0);
  CHECK(green_fractional(iv2, 1.0, {-0.5, 0.0}, {1.2, 0.0}) == doctest::Approx(green_classical(iv2, {-0.5, 0.0}, {1.2, 0.0})).epsilon(1e-12));
  // Symmetry and the scaling law R^{2a-N} G_a(x/R, y/R).
  const auto unit = ModelDomain::disk(1.0);
  const Point x{0.4, 0.3}, y{-0.6, 0.9};
  CHECK(green_fractional(disk, 0.3, x, y) == doctest::Approx(green_fractional(disk, 0.3, y, x)).epsilon(1e-13));
  CHECK(green_fractional(disk, 0.3, x, y) ==
        doctest::Approx(std::pow(1.5, 0.6 - 2.0) * green_fractional(unit, 0.3, (1 / 1.5) * x, (1 / 1.5) * y)).epsilon(1e-13));
}

TEST_CASE("Poisson kernel is the inward normal derivative of G") {
  const auto disk = ModelDomain::disk(1.0);
  const Point x{0.3, -0.2};
  for (double t : {0.0, 1.0, 2.5, 4.0}) {
    const Point z{std::cos(t), std::sin(t)};
    const double h = 1e-5;
    // -d/dnu G at z from the interior, second-order one-sided difference.
    const double g1 = green_classical(disk, x, (1 - h) * z);
    const double g2 = green_classical(disk, x, (1 - 2 * h) * z);
    const double dn = (4.0 * g1 - g2) / (2.0 * h);
    CHECK(poisson_kernel_at(disk, x, z) == doctest::Approx(dn).epsilon(1e-6));
  }
  const auto iv = ModelDomain::interval(1.0);
  CHECK(poisson_kernel_at(iv, {0.5, 0.0}, {1.0, 0.0}) == doctest::Approx(0.75));
  CHECK(poisson_kernel_at(iv, {0.5, 0.0}, {-1.0, 0.0}) == doctest::Approx(0.25));
}

TEST_CASE("Poisson kernel field integrates to one") {
  const auto grid = BoundaryGrid::make(ModelDomain::disk(2.0), 128);
  CHECK(boundary_integrate(poisson_kernel_classical(grid, {0.4, 0.7})) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("fractional trace values") {
  const auto iv = ModelDomain::interval(1.0);
  CHECK(fractional_trace_green_at(iv, 0.5, {0.0, 0.0}, {1.0, 0.0}) == doctest::Approx(std::sqrt(2.0) / pi).epsilon(1e-14));
  CHECK(fractional_trace_green_at(iv, 0.5, {0.5, 0.0}, {1.0, 0.0}) == doctest::Approx(std::sqrt(6.0) / pi).epsilon(1e-14));
  const auto disk = ModelDomain::disk(1.0);
  CHECK(fractional_trace_green_at(disk, 1.0, {0.2, 0.1}, {0.0, 1.0}) ==
        doctest::Approx(poisson_kernel_at(disk, {0.2, 0.1}, {0.0, 1.0})).epsilon(1e-13));
}

TEST_CASE("fractional trace is the weighted boundary limit of G") {
  for (const auto& dom : {ModelDomain::interval(1.0), ModelDomain::disk(1.0)}) {
    for (double a : {0.3, 0.5, 0.8}) {
      const Point x = dom.kind() == DomainKind::interval ? Point{0.2, 0.0} : Point{0.2, -0.3};
      const Point z = dom.kind() == DomainKind::interval ? Point{-1.0, 0.0} : Point{std::cos(1.0), std::sin(1.0)};
      const Point nu = dom.outward_normal(z);
      const double lim = weighted_limit([&](double t) { return green_fractional(dom, a, x, z - t * nu); }, a, 1e-4);
      CHECK(fractional_trace_green_at(dom, a, x, z) == doctest::Approx(lim).epsilon(1e-6));
    }
  }
}

TEST_CASE("Green mass equals the torsion function") {
  const auto iv = ModelDomain::interval(1.0);
  for (double x : {0.0, 0.5, -0.5}) {
    CHECK(green_mass(iv, 0.5, {x, 0.0}).value == doctest::Approx(std::sqrt(1.0 - x * x)).epsilon(1e-6));
  }
  // a = 1: int G = (R^2 - x^2)/2 in 1D and (R^2 - |x|^2)/4 in 2D.
  CHECK(green_mass(ModelDomain::interval(2.0), 1.0, {0.5, 0.0}).value == doctest::Approx((4.0 - 0.25) / 2.0).epsilon(1e-9));
  QuadratureSpec spec;
  spec.rel_tol = 1e-8;
  CHECK(green_mass(ModelDomain::disk(1.0), 1.0, {0.3, 0.2}, spec).value == doctest::Approx((1.0 - 0.13) / 4.0).epsilon(1e-7));
  for (double a : {0.25, 0.75}) {
    const auto disk = ModelDomain::disk(1.0);
    const Point x{0.1, -0.4};
    CHECK(green_mass(disk, a, x, spec).value == doctest::Approx(torsion_reference(disk, a, x)).epsilon(1e-6));
    CHECK(torsion_reference(disk, a, x) ==
          doctest::Approx(std::tgamma(1.0) / (std::pow(4.0, a) * std::tgamma(1.0 + a) * std::tgamma(1.0 + a)) *
                          std::pow(1.0 - norm_sq(x), a)).epsilon(1e-13));
  }
}
