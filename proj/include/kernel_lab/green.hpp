#pragma once

// Closed-form Green functions of -Delta and (-Delta)^a on the interval and
// the disk, their boundary traces, and the Green mass integral.

#include "kernel_lab/geometry.hpp"
#include "kernel_lab/quadrature.hpp"

namespace kernel_lab {

/// Dirichlet Green function of -Delta. Throws SingularityError for x == y
/// and DomainError for non-interior points.
double green_classical(const ModelDomain& domain, Point x, Point y);

/// Green function of (-Delta)^a on the ball of radius R:
///   kappa_{N,a} |x-y|^{2a-N} B(r0; a, N),
///   r0 = (R^2-|x|^2)(R^2-|y|^2) / (R^2 |x-y|^2).
/// Zero when x or y lies outside the open domain. a = 1 reproduces
/// green_classical.
double green_fractional(const ModelDomain& domain, double a, Point x, Point y);

/// Poisson kernel P(x, z) = -d_nu G(x, z), positive with unit mass.
double poisson_kernel_at(const ModelDomain& domain, Point x, Point z);
BoundaryField poisson_kernel_classical(const GridPtr& grid, Point x);

/// Weighted trace lim_{y->z} G_a(x,y) / d(y)^a
///   = (kappa_{N,a}/a) (2/R)^a (R^2-|x|^2)^a |x-z|^{-N}.
/// At a = 1 this is the Poisson kernel.
double fractional_trace_green_at(const ModelDomain& domain, double a, Point x, Point z);
BoundaryField fractional_trace_green(const GridPtr& grid, double a, Point x);

/// int_Omega G_a(x, y) dy, graded around the singularity at x and toward
/// the boundary. Throws ToleranceError when the budget runs out.
QuadResult green_mass(const ModelDomain& domain, double a, Point x, const QuadratureSpec& spec = {});

/// kappa* (R^2-|x|^2)^a, the torsion function the Green mass must equal.
double torsion_reference(const ModelDomain& domain, double a, Point x);

/// Distance from interior point p to the boundary along the unit direction e.
double exit_distance(const ModelDomain& domain, Point p, Point e);

}  // namespace kernel_lab
