#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kernel_lab/errors.hpp"
#include "kernel_lab/green.hpp"
#include "kernel_lab/hadamard.hpp"

using namespace kernel_lab;
using std::numbers::pi;

TEST_CASE("exact dilation derivatives") {
  const Point o{0.0, 0.0}, h{0.5, 0.0};
  CHECK(dilation_derivative_exact(ModelDomain::interval(1.0), 1.0, o, h) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(dilation_derivative_exact(ModelDomain::disk(1.0), 1.0, o, {0.1, -0.7}) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-14));
  CHECK(dilation_derivative_exact(ModelDomain::interval(1.0), 0.5, o, h) == doctest::Approx(2.0 / (pi * std::sqrt(3.0))).epsilon(1e-14));
  CHECK_THROWS_AS(dilation_derivative_exact(ModelDomain::disk(1.0), 0.5, h, h), SingularityError);
}

TEST_CASE("exact derivative matches finite differences of the scaling law") {
  for (const auto& dom : {ModelDomain::interval(1.5), ModelDomain::disk(1.5)}) {
    const bool iv = dom.kind() == DomainKind::interval;
    const Point x = iv ? Point{-0.4, 0.0} : Point{0.2, 0.1};
    const Point y = iv ? Point{0.9, 0.0} : Point{-0.3, 0.4};
    for (double a : {0.3, 0.5, 0.8, 1.0}) {
      // G on (1+t) Omega equals (1+t)^{2a-N} G(x/(1+t), y/(1+t)) on Omega.
      auto g = [&](double t) {
        const double f = 1.0 + t;
        const double v = a == 1.0 ? green_classical(dom, (1 / f) * x, (1 / f) * y) : green_fractional(dom, a, (1 / f) * x, (1 / f) * y);
        return std::pow(f, 2.0 * a - dom.dim()) * v;
      };
      const double t = 1e-4;
      const double fd = (g(t) - g(-t)) / (2.0 * t);
      CHECK(dilation_derivative_exact(dom, a, x, y) == doctest::Approx(fd).epsilon(1e-7));
      CHECK(dilation_derivative_fd(dom, a, x, y, t) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("boundary-integral prediction") {
  const auto disk = ModelDomain::disk(1.0);
  const auto grid = BoundaryGrid::make(disk, 256);
  CHECK(hadamard_prediction(1.0, {0.0, 0.0}, {0.5, 0.0}, PerturbationField::constant(grid, 1.0)) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-12));
  CHECK(hadamard_prediction(0.5, {0.1, 0.0}, {0.5, 0.2}, PerturbationField::constant(grid, 0.0)) == 0.0);
  for (double a : {0.25, 0.5, 0.75}) {
    const Point x{0.2, 0.1}, y{-0.3, 0.4};
    CHECK(hadamard_prediction(a, x, y, PerturbationField::dilation(grid)) ==
          doctest::Approx(dilation_derivative_exact(disk, a, x, y)).epsilon(1e-10));
  }
  const auto iv = BoundaryGrid::make(ModelDomain::interval(1.0));
  CHECK(hadamard_prediction(0.5, {0.0, 0.0}, {0.5, 0.0}, PerturbationField::constant(iv, 1.0)) ==
        doctest::Approx(2.0 / (pi * std::sqrt(3.0))).epsilon(1e-14));
}

TEST_CASE("finite differences leave the domain") {
  CHECK_THROWS_AS(dilation_derivative_fd(ModelDomain::interval(1.0), 0.5, {0.0, 0.0}, {0.95, 0.0}, 0.1), DomainError);
  CHECK_THROWS_AS(dilation_derivative_fd(ModelDomain::interval(1.0), 0.5, {0.0, 0.0}, {0.5, 0.0}, 0.0), DomainError);
}

TEST_CASE("Hadamard report") {
  const auto grid = BoundaryGrid::make(ModelDomain::interval(1.0));
  SUBCASE("classical") {
    const auto t = hadamard_report(grid, 1.0, {{{0.0, 0.0}, {0.5, 0.0}}});
    CHECK(t.report.overall_pass());
    CHECK(t.rows[0].prediction == doctest::Approx(0.5));
    CHECK(t.report.metadata["alpha"].get<double>() == 1.0);
  }
  SUBCASE("fractional with second-order convergence") {
    const auto t = hadamard_report(grid, 0.5, {{{0.0, 0.0}, {0.5, 0.0}}}, {1e-2, 1e-3});
    CHECK(t.report.overall_pass());
    CHECK(t.rows[0].order == doctest::Approx(2.0).epsilon(1e-2));
    CHECK(t.rows[0].fd_error[0] / t.rows[0].fd_error[1] == doctest::Approx(100.0).epsilon(0.05));
  }
  SUBCASE("empty") {
    const auto t = hadamard_report(grid, 0.5, {});
    CHECK(t.report.records.empty());
    CHECK(t.report.overall_pass());
  }
}
