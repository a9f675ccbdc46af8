#pragma once

// Composite Gauss-Legendre quadrature with geometric (hp) grading toward
// endpoint singularities, and a doubling driver with an evaluation budget.

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "kernel_lab/errors.hpp"

namespace kernel_lab {

/// Resolution and budget for the singular quadratures.
struct QuadratureSpec {
  /// Uniform panels per bulk segment; geometric layers = 8 * resolution.
  int resolution = 2;
  /// Angular nodes for the two-dimensional line decompositions.
  int angles = 64;
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::int64_t max_evals = 1'000'000;
  /// Number of resolution doublings the driver may attempt.
  int max_doublings = 5;
};

/// Behaviour of an integrand near one endpoint: f ~ dist^exponent.
struct EndpointBehavior {
  bool singular = false;
  double exponent = 0.0;

  static EndpointBehavior regular() { return {}; }
  static EndpointBehavior power(double exponent) { return {true, exponent}; }
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
  int resolution = 0;
};

/// Panel integrator that counts integrand evaluations.
class Integrator {
 public:
  static constexpr int kOrder = 20;
  using Rule = boost::math::quadrature::gauss<double, kOrder>;

  explicit Integrator(int resolution) : resolution_(resolution < 1 ? 1 : resolution) {}

  int resolution() const noexcept { return resolution_; }
  int layers() const noexcept { return 8 * resolution_; }
  std::int64_t evaluations() const noexcept { return evaluations_; }
  void add_evaluations(std::int64_t n) noexcept { evaluations_ += n; }

  template <class F>
  double gauss(F&& f, double a, double b) {
    if (a == b) return 0.0;
    evaluations_ += kOrder;
    return Rule::integrate(f, a, b);
  }

  template <class F>
  double uniform(F&& f, double a, double b, int panels) {
    double sum = 0.0;
    const double h = (b - a) / panels;
    for (int j = 0; j < panels; ++j) sum += gauss(f, a + j * h, j + 1 == panels ? b : a + (j + 1) * h);
    return sum;
  }

  /// Integral over [a, b]. A singular end gets geometric layers of ratio 2
  /// down to distance (b-a) 2^-layers, and the innermost piece is closed by
  /// the power law f ~ C dist^exponent. max_layers caps the depth for
  /// integrands that lose accuracy to cancellation close to the end.
  template <class F>
  double graded(F&& f, double a, double b, EndpointBehavior left, EndpointBehavior right, int max_layers = -1) {
    if (a == b) return 0.0;
    if (left.singular && right.singular) {
      const double mid = 0.5 * (a + b);
      return graded(f, a, mid, left, EndpointBehavior::regular(), max_layers) +
             graded(f, mid, b, EndpointBehavior::regular(), right, max_layers);
    }
    if (!left.singular && !right.singular) return uniform(f, a, b, resolution_);
    const bool toward_right = right.singular;
    const double beta = toward_right ? right.exponent : left.exponent;
    const double length = b - a;
    const double end = toward_right ? b : a;
    const double dir = toward_right ? -1.0 : 1.0;  // from the singular end into the interval
    auto at = [&](double dist) { return end + dir * dist; };
    double sum = 0.0;
    double outer = length;
    const int depth = max_layers > 0 && max_layers < layers() ? max_layers : layers();
    // Below this distance end + dir * dist no longer resolves from end.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(end), length);
    for (int k = 0; k < depth && 0.5 * outer > floor; ++k) {
      const double inner = 0.5 * outer;
      const int panels = (k == 0) ? resolution_ : 1;
      const double p = at(outer);
      const double q = at(inner);
      sum += toward_right ? uniform(f, p, q, panels) : uniform(f, q, p, panels);
      outer = inner;
    }
    evaluations_ += 1;
    sum += f(at(outer)) * outer / (1.0 + beta);
    return sum;
  }

 private:
  int resolution_;
  std::int64_t evaluations_ = 0;
};

/// Evaluates eval(Integrator&) at spec.resolution and doubles the resolution
/// until successive values agree to rel_tol (or abs_tol). Throws
/// ToleranceError with the last estimate when the budget or the doubling
/// limit is exhausted.
template <class Eval>
QuadResult converge(Eval&& eval, const QuadratureSpec& spec, const std::string& what) {
  std::int64_t total = 0;
  int resolution = spec.resolution < 1 ? 1 : spec.resolution;
  Integrator first(resolution);
  double previous = eval(first);
  total += first.evaluations();
  double error = HUGE_VAL;
  for (int step = 0; step < spec.max_doublings; ++step) {
    resolution *= 2;
    Integrator next(resolution);
    const double current = eval(next);
    total += next.evaluations();
    error = std::abs(current - previous);
    if (error <= spec.rel_tol * std::abs(current) || error <= spec.abs_tol) {
      return {current, error, total, resolution};
    }
    previous = current;
    if (total > spec.max_evals) break;
  }
  throw ToleranceError(what + ": quadrature did not converge within budget", previous, error);
}

/// Single fixed-resolution evaluation, for callers that refine externally.
template <class Eval>
QuadResult evaluate_once(Eval&& eval, int resolution) {
  Integrator integ(resolution);
  const double v = eval(integ);
  return {v, 0.0, integ.evaluations(), integ.resolution()};
}

}  // namespace kernel_lab
