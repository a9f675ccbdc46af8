#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/beta.hpp>

#include "kernel_lab/errors.hpp"
#include "kernel_lab/specfun.hpp"

using namespace kernel_lab;
using std::numbers::pi;

TEST_CASE("gamma agrees with std::tgamma") {
  for (double x = 0.05; x < 30.0; x += 0.173) {
    CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
  }
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-15));
}

TEST_CASE("gamma is exact at integers") {
  double fact = 1.0;
  for (int n = 1; n <= 20; ++n) {
    CHECK(gamma_fn(n) == fact);
    fact *= n;
  }
}

TEST_CASE("gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
  CHECK_THROWS_AS(gamma_fn(-1.5), DomainError);
}

TEST_CASE("fractional Laplacian constant") {
  CHECK(frac_laplacian_constant(1, 0.5) == doctest::Approx(1.0 / pi).epsilon(1e-14));
  CHECK(frac_laplacian_constant(2, 0.5) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-14));
  // Independent evaluation with std::tgamma.
  for (int n : {1, 2}) {
    for (double a : {0.1, 0.25, 0.6, 0.9}) {
      const double ref = std::pow(4.0, a) * a * std::tgamma(0.5 * n + a) / (std::pow(pi, 0.5 * n) * std::tgamma(1.0 - a));
      CHECK(frac_laplacian_constant(n, a) == doctest::Approx(ref).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(frac_laplacian_constant(1, 1.0), DomainError);
  CHECK_THROWS_AS(frac_laplacian_constant(3, 0.5), DomainError);
}

TEST_CASE("Green and torsion constants") {
  CHECK(green_constant(1, 0.5) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-14));
  CHECK(green_constant(2, 0.5) == doctest::Approx(1.0 / (2.0 * pi * pi)).epsilon(1e-14));
  CHECK(torsion_constant(1, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(torsion_constant(2, 0.5) == doctest::Approx(2.0 / pi).epsilon(1e-14));
  CHECK(torsion_constant(2, 1.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(torsion_constant(1, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("representation constant identity on the interval") {
  // Gamma(a) Gamma(a+1) 4^a kappa_{1,a} / a = 1 for every a.
  for (double a = 0.05; a < 1.0; a += 0.05) {
    CHECK(representation_constant(a) * std::pow(4.0, a) * green_constant(1, a) / a == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(representation_constant(a) == doctest::Approx(std::tgamma(a) * std::tgamma(a + 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("boundary integral B against the incomplete beta function") {
  // t = u/(1-u) turns B into the incomplete beta B_{r0/(1+r0)}(a, N/2 - a).
  for (int n : {1, 2}) {
    for (double a : {0.1, 0.3, 0.45}) {
      for (double r0 : {1e-4, 0.3, 1.0, 7.5, 400.0}) {
        const double ref = boost::math::beta(a, 0.5 * n - a, r0 / (1.0 + r0));
        CHECK(boundary_integral_B_quadrature(r0, a, n) == doctest::Approx(ref).epsilon(1e-11));
        CHECK(boundary_integral_B(r0, a, n) == doctest::Approx(ref).epsilon(1e-13));
      }
    }
  }
  for (double a : {0.6, 0.8, 0.95}) {
    for (double r0 : {0.01, 2.0, 90.0}) {
      CHECK(boundary_integral_B_quadrature(r0, a, 2) ==
            doctest::Approx(boost::math::beta(a, 1.0 - a, r0 / (1.0 + r0))).epsilon(1e-11));
    }
  }
}

TEST_CASE("closed-form and incomplete-beta branches of B match quadrature") {
  for (int n : {1, 2}) {
    for (double a : {0.3, 0.5, 0.7, 1.0}) {
      for (double r0 : {1e-6, 0.01, 0.5, 3.0, 1e3, 1e6}) {
        CHECK(boundary_integral_B(r0, a, n) ==
              doctest::Approx(boundary_integral_B_quadrature(r0, a, n)).epsilon(1e-11));
      }
    }
  }
  CHECK(boundary_integral_B(3.0, 0.5, 1) == doctest::Approx(2.0 * std::asinh(std::sqrt(3.0))).epsilon(1e-15));
  CHECK(boundary_integral_B(0.0, 0.5, 1) == 0.0);
}

TEST_CASE("B derivative matches a central difference") {
  for (double a : {0.3, 0.5, 0.8}) {
    for (double r0 : {0.2, 2.0, 30.0}) {
      const double h = 1e-5 * r0;
      const double fd = (boundary_integral_B(r0 + h, a, 1) - boundary_integral_B(r0 - h, a, 1)) / (2.0 * h);
      CHECK(boundary_integral_B_derivative(r0, a, 1) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("FracParams invariants") {
  const auto p = FracParams::make(0.5, 0.0);
  CHECK(p.theta() == doctest::Approx(0.5));
  CHECK(FracParams::make(1.0, 1.0).theta() == doctest::Approx(1.25));
  CHECK_THROWS_AS(FracParams::make(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(FracParams::make(1.2, 0.0), DomainError);
  CHECK_THROWS_AS(FracParams::make(0.5, -1.0), DomainError);
  CHECK_NOTHROW(FracParams::make(0.5, -0.99));
}
