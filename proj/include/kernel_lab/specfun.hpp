#pragma once

// Gamma function and the normalization constants of the fractional
// Laplacian, its unit-ball Green function and its torsion function.

namespace kernel_lab {

/// Indices (a, s, theta) of the fractional harmonic spaces.
/// theta = s/2 + a/2 + 1/4 and s > -a - 1/2, which forces theta > 0.
class FracParams {
 public:
  /// Throws DomainError unless a in (0,1] and s > -a - 1/2.
  static FracParams make(double a, double s);

  double a() const noexcept { return a_; }
  double s() const noexcept { return s_; }
  double theta() const noexcept { return theta_; }

 private:
  FracParams(double a, double s, double theta) : a_(a), s_(s), theta_(theta) {}
  double a_;
  double s_;
  double theta_;
};

/// Gamma(x) for x > 0 (Lanczos, g = 7). Relative error below 1e-13 on [0.1, 30].
double gamma_fn(double x);

/// c_{N,a} = 4^a a Gamma((N+2a)/2) / (pi^{N/2} Gamma(1-a)), the constant that
/// makes the singular-integral form agree with the Fourier symbol |xi|^{2a}.
double frac_laplacian_constant(int dim, double a);

/// kappa_{N,a} = Gamma(N/2) / (4^a pi^{N/2} Gamma(a)^2), prefactor of the
/// ball Green function. Accepts a = 1 for formal limit computations.
double green_constant(int dim, double a);

/// B(r0; a, N) = int_0^{r0} t^{a-1} (1+t)^{-N/2} dt.
/// Closed antiderivatives for a = 1/2 and a = 1, the incomplete beta
/// function B_{r0/(1+r0)}(a, N/2 - a) when N/2 > a, Gauss-Kronrod otherwise.
double boundary_integral_B(double r0, double a, int dim);

/// Same integral, always by quadrature. Exposed so that the other branches
/// can be checked against it.
double boundary_integral_B_quadrature(double r0, double a, int dim);

/// dB/dr0 = r0^{a-1} (1+r0)^{-N/2}.
double boundary_integral_B_derivative(double r0, double a, int dim);

/// kappa* = Gamma(N/2) / (4^a Gamma(N/2+a) Gamma(1+a)); the solution of
/// (-Delta)^a w = 1 on the unit ball is kappa* (1-|x|^2)^a.
double torsion_constant(int dim, double a);

/// Gamma(a) Gamma(a+1), the constant of the fractional representation formula.
double representation_constant(double a);

}  // namespace kernel_lab
