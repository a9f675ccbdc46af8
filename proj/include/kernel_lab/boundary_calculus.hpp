#pragma once

// Spectral calculus of M = 1 - Laplace-Beltrami on the boundary.
//
// Circle of radius R, n nodes: coefficients in the L^2(dsigma)-orthonormal
// basis e_k = exp(i k t) / sqrt(2 pi R), k = -n/2+1 .. n/2, stored in FFT
// order (index i holds mode i for i <= n/2 and mode i-n above). The
// Laplace-Beltrami eigenvalue of mode k is k^2/R^2.
//
// Interval: the boundary is two points with counting measure; the basis is
// the pair of node indicators and L = 0, so M is the identity.

#include <complex>
#include <vector>

#include "kernel_lab/geometry.hpp"

namespace kernel_lab {

struct Spectrum {
  GridPtr grid;
  std::vector<std::complex<double>> coeffs;

  int size() const noexcept { return static_cast<int>(coeffs.size()); }
  /// Fourier mode of coefficient i (0 for both interval indicators).
  int mode(int i) const;
  /// Eigenvalue of L = -Laplace-Beltrami for coefficient i.
  double eigenvalue(int i) const;
};

Spectrum to_spectrum(const BoundaryField& field);
BoundaryField from_spectrum(const Spectrum& spec);

/// Multiplies coefficient k by (1 + lambda_k)^t.
Spectrum apply_M_power(const Spectrum& spec, double t);
BoundaryField apply_M_power(const BoundaryField& field, double t);

/// <f, g>_s = sum_k (1+lambda_k)^s f_k conj(g_k), real part.
double sobolev_inner(const BoundaryField& f, const BoundaryField& g, double s);
double sobolev_inner(const Spectrum& f, const Spectrum& g, double s);

/// Weighted node sum (trapezoid on the circle, counting measure on the interval).
double boundary_integrate(const BoundaryField& field);

/// L^2(dsigma) pairing by the node sum.
double boundary_pairing(const BoundaryField& f, const BoundaryField& g);

/// Trigonometric interpolation of a circle field onto a grid of a different
/// size (zero padding or truncation of the spectrum). The interval is
/// returned unchanged.
BoundaryField resample(const BoundaryField& field, const GridPtr& target);

/// Evaluates the trigonometric interpolant of a circle field at angle t.
double evaluate_interpolant(const Spectrum& spec, double t);

}  // namespace kernel_lab
