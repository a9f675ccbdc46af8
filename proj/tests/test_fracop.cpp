#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "kernel_lab/errors.hpp"
#include "kernel_lab/fracop.hpp"
#include "kernel_lab/green.hpp"
#include "kernel_lab/specfun.hpp"

using namespace kernel_lab;
using std::numbers::pi;

namespace {

// Getoor: (-Delta)^a (1-|x|^2)^a_+ = 4^a Gamma(a+N/2) Gamma(a+1) / Gamma(N/2).
double getoor(int n, double a) { return std::pow(4.0, a) * std::tgamma(a + 0.5 * n) * std::tgamma(a + 1.0) / std::tgamma(0.5 * n); }

// Spec whose driver stops after one doubling, so the returned value is the
// one at resolution 2 * base.
QuadratureSpec fixed_resolution(int base) {
  QuadratureSpec s;
  s.resolution = base;
  s.rel_tol = 1e300;
  return s;
}

}  // namespace

TEST_CASE("Getoor identity on the interval") {
  const auto iv = ModelDomain::interval(1.0);
  for (double a : {0.25, 0.5, 0.75}) {
    const auto u = power_profile(iv, a);
    for (double x : {0.0, 0.4, -0.7}) {
      CHECK(frac_laplacian_apply(u, a, {x, 0.0}).value == doctest::Approx(getoor(1, a)).epsilon(1e-6));
    }
  }
  CHECK(getoor(1, 0.5) == doctest::Approx(1.0 / torsion_constant(1, 0.5)));
}

TEST_CASE("Getoor identity on the disk") {
  const auto disk = ModelDomain::disk(1.0);
  for (double a : {0.3, 0.5}) {
    const auto u = power_profile(disk, a);
    for (const Point x : {Point{0.0, 0.0}, Point{0.3, -0.5}}) {
      CHECK(frac_laplacian_apply(u, a, x).value == doctest::Approx(getoor(2, a)).epsilon(1e-6));
    }
  }
}

TEST_CASE("singular a-harmonic profile") {
  const auto iv = ModelDomain::interval(1.0);
  for (double a : {0.25, 0.5, 0.75}) {
    const auto u = power_profile(iv, a - 1.0);
    for (double x : {0.0, 0.5}) CHECK(std::abs(frac_laplacian_apply(u, a, {x, 0.0}).value) < 1e-5);
  }
  CHECK_THROWS_AS(frac_laplacian_apply(power_profile(iv, -0.5), 0.5, {0.9, 0.0}), DomainError);
  CHECK_THROWS_AS(frac_laplacian_apply(power_profile(iv, 0.5), 1.0, {0.0, 0.0}), DomainError);
}

TEST_CASE("linearity and reflection symmetry") {
  const auto iv = ModelDomain::interval(1.0);
  const SampledInteriorField u(iv, [](Point p) { return std::pow(1.0 - p.x * p.x, 0.5) * (1.0 + p.x * p.x); },
                               BoundaryBehavior::degenerate, 0.5);
  const double base = frac_laplacian_apply(u, 0.5, {0.3, 0.0}).value;
  CHECK(frac_laplacian_apply(u.scaled(2.0), 0.5, {0.3, 0.0}).value == doctest::Approx(2.0 * base).epsilon(1e-12));
  CHECK(frac_laplacian_apply(u, 0.5, {-0.3, 0.0}).value == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("mesh refinement reduces the Getoor error") {
  const auto iv = ModelDomain::interval(1.0);
  const double a = 0.25;
  const auto u = power_profile(iv, a);
  const double ref = getoor(1, a);
  const double e1 = std::abs(frac_laplacian_apply(u, a, {0.3, 0.0}, fixed_resolution(1)).value - ref);
  const double e2 = std::abs(frac_laplacian_apply(u, a, {0.3, 0.0}, fixed_resolution(2)).value - ref);
  MESSAGE("Getoor error at base resolution 1: " << e1 << ", at base resolution 2: " << e2);
  CHECK((e2 <= 0.5 * e1 || e2 < 1e-12));
}

TEST_CASE("mollifier has unit mass") {
  const auto iv = ModelDomain::interval(1.0);
  const auto disk = ModelDomain::disk(1.0);
  boost::math::quadrature::tanh_sinh<double> ts;
  const auto m1 = MollifierSpec::make(iv, {0.1, 0.0}, 0.3);
  CHECK(ts.integrate([&](double y) { return m1({y, 0.0}); }, -0.2, 0.4) == doctest::Approx(1.0).epsilon(1e-12));
  const auto m2 = MollifierSpec::make(disk, {0.1, 0.2}, 0.3);
  const double radial = ts.integrate([&](double r) { return m2({0.1 + r, 0.2}) * r; }, 0.0, 0.3);
  CHECK(2.0 * pi * radial == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m2.peak() == doctest::Approx(m2({0.1, 0.2})));
  CHECK_THROWS_AS(MollifierSpec::make(iv, {0.8, 0.0}, 0.3), DomainError);
}

TEST_CASE("mollified Green function approaches G as the width shrinks") {
  const auto iv = ModelDomain::interval(1.0);
  const Point x{0.0, 0.0}, z{0.6, 0.0};
  const double g = green_fractional(iv, 0.5, x, z);
  double prev = HUGE_VAL;
  for (double eps : {0.2, 0.1, 0.05}) {
    const double err = std::abs(mollified_green_value(iv, 0.5, MollifierSpec::make(iv, x, eps), z) - g);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("residual of the mollified Green function") {
  const auto iv = ModelDomain::interval(1.0);
  const auto moll = MollifierSpec::make(iv, {0.1, 0.0}, 0.2);
  const auto report = residual_check(iv, 0.5, moll, {{0.1, 0.0}, {0.6, 0.0}, {-0.5, 0.0}}, {}, 1e-2);
  CHECK(report.overall_pass());
  REQUIRE(report.records.size() == 3);
  CHECK(report.records[0].computed == doctest::Approx(moll.peak()).epsilon(1e-3));
  CHECK(std::abs(report.records[1].computed) < 1e-3 * moll.peak());
  // A tolerance nobody can meet flips the pass flag.
  CHECK_FALSE(residual_check(iv, 0.5, moll, {{0.1, 0.0}}, {}, 1e-15).overall_pass());
}

TEST_CASE("total mass of the applied mollified Green function is one") {
  const auto iv = ModelDomain::interval(1.0);
  const auto moll = MollifierSpec::make(iv, {0.0, 0.0}, 0.2);
  const auto v = mollified_green(iv, 0.5, moll);
  using Rule = boost::math::quadrature::gauss<double, 30>;
  double mass = 0.0;
  for (double lo = -0.2; lo < 0.19; lo += 0.1) {
    mass += Rule::integrate([&](double y) { return frac_laplacian_apply(v, 0.5, {y, 0.0}).value; }, lo, lo + 0.1);
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("boundary trace of the mollified Green function") {
  SUBCASE("interval") {
    const auto iv = ModelDomain::interval(1.0);
    const auto moll = MollifierSpec::make(iv, {0.2, 0.0}, 0.2);
    const auto v = mollified_green(iv, 0.5, moll);
    for (const Point z : {Point{-1.0, 0.0}, Point{1.0, 0.0}}) {
      CHECK(weighted_trace(v, 0.5, z) == doctest::Approx(mollified_trace_average(iv, 0.5, moll, z)).epsilon(1e-3));
    }
  }
  SUBCASE("disk") {
    const auto disk = ModelDomain::disk(1.0);
    const auto moll = MollifierSpec::make(disk, {0.2, -0.1}, 0.3);
    QuadratureSpec spec;
    spec.angles = 32;
    spec.rel_tol = 1e-8;
    const auto v = mollified_green(disk, 0.5, moll, spec, {48, 16});
    for (int j = 0; j < 8; ++j) {
      const double t = 2.0 * pi * j / 8;
      const Point z{std::cos(t), std::sin(t)};
      CHECK(weighted_trace(v, 0.5, z) == doctest::Approx(mollified_trace_average(disk, 0.5, moll, z, spec)).epsilon(1e-3));
    }
  }
}
