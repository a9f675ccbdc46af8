#include "kernel_lab/geometry.hpp"

#include <numbers>

#include "kernel_lab/errors.hpp"

namespace kernel_lab {

ModelDomain ModelDomain::interval(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("domain radius must be positive");
  return {DomainKind::interval, radius};
}

ModelDomain ModelDomain::disk(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("domain radius must be positive");
  return {DomainKind::disk, radius};
}

bool ModelDomain::is_interior(Point p) const noexcept {
  if (kind_ == DomainKind::interval && p.y != 0.0) return false;
  return std::isfinite(p.x) && std::isfinite(p.y) && norm(p) < radius_;
}

void ModelDomain::require_interior(Point p, const char* what) const {
  if (!is_interior(p)) {
    throw DomainError(std::string(what) + ": point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                      ") is not interior to the " + name());
  }
}

Point ModelDomain::outward_normal(Point z) const {
  const double r = norm(z);
  if (r == 0.0) throw DomainError("outward_normal: origin is not a boundary point");
  return (1.0 / r) * z;
}

double ModelDomain::boundary_measure() const noexcept {
  return kind_ == DomainKind::interval ? 2.0 : 2.0 * std::numbers::pi * radius_;
}

std::shared_ptr<const BoundaryGrid> BoundaryGrid::make(const ModelDomain& domain, int n) {
  const double r = domain.radius();
  if (domain.kind() == DomainKind::interval) {
    return std::shared_ptr<const BoundaryGrid>(
        new BoundaryGrid(domain, {Point{-r, 0.0}, Point{r, 0.0}}, {1.0, 1.0}));
  }
  if (n < 8 || n % 2 != 0) throw DomainError("circle grid size must be even and >= 8");
  std::vector<Point> nodes(static_cast<std::size_t>(n));
  const double h = 2.0 * std::numbers::pi / n;
  for (int i = 0; i < n; ++i) {
    const double t = h * i;
    nodes[static_cast<std::size_t>(i)] = {r * std::cos(t), r * std::sin(t)};
  }
  return std::shared_ptr<const BoundaryGrid>(
      new BoundaryGrid(domain, std::move(nodes), std::vector<double>(static_cast<std::size_t>(n), r * h)));
}

double BoundaryGrid::angle(int i) const {
  if (domain_.kind() == DomainKind::interval) return i == 0 ? std::numbers::pi : 0.0;
  return 2.0 * std::numbers::pi * i / size();
}

BoundaryField BoundaryField::zeros(GridPtr grid) {
  const auto n = static_cast<std::size_t>(grid->size());
  return {std::move(grid), std::vector<double>(n, 0.0)};
}

void require_same_grid(const BoundaryField& f, const BoundaryField& g) {
  if (!f.grid || !g.grid || !f.grid->same_as(*g.grid) || f.values.size() != g.values.size()) {
    throw ContractError("boundary fields live on different grids");
  }
}

}  // namespace kernel_lab
