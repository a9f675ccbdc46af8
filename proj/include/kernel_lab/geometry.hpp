#pragma once

#include <cmath>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace kernel_lab {

/// Point in R^2. Interval points use y == 0.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point, Point) = default;
};

inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double norm_sq(Point p) { return dot(p, p); }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point p, Point q) { return norm(p - q); }

enum class DomainKind { interval, disk };

/// Interval (-R, R) or disk of radius R, centred at the origin.
class ModelDomain {
 public:
  static ModelDomain interval(double radius);
  static ModelDomain disk(double radius);

  DomainKind kind() const noexcept { return kind_; }
  double radius() const noexcept { return radius_; }
  int dim() const noexcept { return kind_ == DomainKind::interval ? 1 : 2; }
  std::string name() const { return kind_ == DomainKind::interval ? "interval" : "disk"; }

  /// True for points of the right dimension with |p| < R.
  bool is_interior(Point p) const noexcept;
  /// d(p) = R - |p|.
  double distance_to_boundary(Point p) const noexcept { return radius_ - norm(p); }
  /// Throws DomainError unless p is strictly interior.
  void require_interior(Point p, const char* what) const;
  /// Outer unit normal at a boundary point.
  Point outward_normal(Point z) const;
  /// Boundary measure |dOmega| (2 for the interval by counting measure).
  double boundary_measure() const noexcept;

  friend bool operator==(const ModelDomain&, const ModelDomain&) = default;

 private:
  ModelDomain(DomainKind kind, double radius) : kind_(kind), radius_(radius) {}
  DomainKind kind_;
  double radius_;
};

/// Quadrature nodes on the boundary: the two endpoints of the interval with
/// unit (counting) weights, or n equispaced angles on the circle with
/// weights 2 pi R / n.
class BoundaryGrid {
 public:
  /// n is ignored for the interval; for the circle it must be even and >= 8.
  static std::shared_ptr<const BoundaryGrid> make(const ModelDomain& domain, int n = 256);

  const ModelDomain& domain() const noexcept { return domain_; }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  std::span<const Point> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  Point node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  /// Angle of circle node i (2 pi i / n); for the interval 0 or pi.
  double angle(int i) const;

  /// Grids are interchangeable when they have the same domain and size.
  bool same_as(const BoundaryGrid& other) const noexcept {
    return domain_ == other.domain_ && size() == other.size();
  }

 private:
  BoundaryGrid(const ModelDomain& domain, std::vector<Point> nodes, std::vector<double> weights)
      : domain_(domain), nodes_(std::move(nodes)), weights_(std::move(weights)) {}
  ModelDomain domain_;
  std::vector<Point> nodes_;
  std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const BoundaryGrid>;

/// Real samples on a boundary grid.
struct BoundaryField {
  GridPtr grid;
  std::vector<double> values;

  static BoundaryField zeros(GridPtr grid);
  template <class F>
  static BoundaryField sample(GridPtr grid, F&& f) {
    BoundaryField out = zeros(grid);
    for (int i = 0; i < grid->size(); ++i) out.values[static_cast<std::size_t>(i)] = f(grid->node(i));
    return out;
  }

  int size() const noexcept { return static_cast<int>(values.size()); }
  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return values[static_cast<std::size_t>(i)]; }
};

/// Throws ContractError when f and g live on different grids.
void require_same_grid(const BoundaryField& f, const BoundaryField& g);

}  // namespace kernel_lab
