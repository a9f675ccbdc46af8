#include "kernel_lab/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "kernel_lab/errors.hpp"

namespace kernel_lab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dim(int dim) {
  if (dim != 1 && dim != 2) throw DomainError("dimension must be 1 or 2, got " + std::to_string(dim));
}

void check_open_order(double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("fractional order must lie in (0,1)");
}

void check_closed_order(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("fractional order must lie in (0,1]");
}

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
  if (x < 0.5) return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  // Split the power to keep t^(z+1/2) finite up to x ~ 170.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * half * (half * std::exp(-t)) * sum;
}

}  // namespace

FracParams FracParams::make(double a, double s) {
  check_closed_order(a);
  if (!std::isfinite(s) || !(s > -a - 0.5)) throw DomainError("Sobolev index must satisfy s > -a - 1/2");
  return FracParams(a, s, 0.5 * s + 0.5 * a + 0.25);
}

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma_fn requires a finite positive argument");
  // Integers are exact factorials.
  if (x == std::floor(x) && x <= 25.0) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    return f;
  }
  return lanczos_gamma(x);
}

double frac_laplacian_constant(int dim, double a) {
  check_dim(dim);
  check_open_order(a);
  const double n = dim;
  return std::pow(4.0, a) * a * gamma_fn(0.5 * (n + 2.0 * a)) /
         (std::pow(kPi, 0.5 * n) * gamma_fn(1.0 - a));
}

double green_constant(int dim, double a) {
  check_dim(dim);
  check_closed_order(a);
  const double n = dim;
  const double ga = gamma_fn(a);
  return gamma_fn(0.5 * n) / (std::pow(4.0, a) * std::pow(kPi, 0.5 * n) * ga * ga);
}

double boundary_integral_B_quadrature(double r0, double a, int dim) {
  check_dim(dim);
  check_closed_order(a);
  if (!(r0 >= 0.0)) throw DomainError("boundary_integral_B requires r0 >= 0");
  if (r0 == 0.0) return 0.0;
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double half_n = 0.5 * dim;
  constexpr unsigned kMaxDepth = 10;
  constexpr double kTol = 1e-13;

  // t = u^{1/a} on [0, min(r0,1)] removes the t^{a-1} endpoint singularity.
  const double lower_top = std::pow(std::min(r0, 1.0), a);
  const double inv_a = 1.0 / a;
  double value = inv_a * Rule::integrate(
                             [&](double u) { return std::pow(1.0 + std::pow(u, inv_a), -half_n); }, 0.0,
                             lower_top, kMaxDepth, kTol);
  if (r0 > 1.0) {
    // t = e^v on [1, r0].
    value += Rule::integrate(
        [&](double v) { return std::exp((a - half_n) * v) * std::pow(1.0 + std::exp(-v), -half_n); }, 0.0,
        std::log(r0), kMaxDepth, kTol);
  }
  return value;
}

double boundary_integral_B(double r0, double a, int dim) {
  check_dim(dim);
  check_closed_order(a);
  if (!(r0 >= 0.0)) throw DomainError("boundary_integral_B requires r0 >= 0");
  if (a == 0.5) {
    const double root = std::sqrt(r0);
    return dim == 1 ? 2.0 * std::asinh(root) : 2.0 * std::atan(root);
  }
  if (a == 1.0) {
    return dim == 1 ? 2.0 * (std::sqrt(1.0 + r0) - 1.0) : std::log1p(r0);
  }
  const double b = 0.5 * dim - a;
  if (b > 0.0) {
    // Incomplete beta at x = r0/(1+r0); past x = 1/2 go through the
    // complement so that 1 - x = 1/(1+r0) keeps its digits.
    if (r0 <= 1.0) return boost::math::beta(a, b, r0 / (1.0 + r0));
    return boost::math::beta(a, b) - boost::math::beta(b, a, 1.0 / (1.0 + r0));
  }
  return boundary_integral_B_quadrature(r0, a, dim);
}

double boundary_integral_B_derivative(double r0, double a, int dim) {
  check_dim(dim);
  check_closed_order(a);
  if (!(r0 > 0.0)) throw DomainError("dB/dr0 requires r0 > 0");
  return std::pow(r0, a - 1.0) * std::pow(1.0 + r0, -0.5 * dim);
}

double torsion_constant(int dim, double a) {
  check_dim(dim);
  check_closed_order(a);
  const double n = dim;
  return gamma_fn(0.5 * n) / (std::pow(4.0, a) * gamma_fn(0.5 * n + a) * gamma_fn(1.0 + a));
}

double representation_constant(double a) {
  check_closed_order(a);
  return gamma_fn(a) * gamma_fn(a + 1.0);
}

}  // namespace kernel_lab
