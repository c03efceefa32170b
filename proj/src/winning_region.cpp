#include "reachavoid/winning_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "reachavoid/errors.hpp"
#include "reachavoid/scalar_opt.hpp"

namespace reachavoid {

const char* to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::PWR:
      return "PWR";
    case RegionLabel::EWR:
      return "EWR";
    case RegionLabel::ON_BARRIER:
      return "ON_BARRIER";
  }
  return "?";
}

const char* to_string(CellLabel label) {
  switch (label) {
    case CellLabel::PWR:
      return "PWR";
    case CellLabel::EWR:
      return "EWR";
    case CellLabel::ON_BARRIER:
      return "ON_BARRIER";
    case CellLabel::OUTSIDE:
      return "OUTSIDE";
  }
  return "?";
}

RegionLabel classify(Point evader, const BarrierCurve& curve, double tol_band) {
  const auto yb = barrier_y(curve, evader.x);
  if (!yb) return RegionLabel::PWR;
  if (evader.y > *yb + tol_band) return RegionLabel::EWR;
  if (evader.y < *yb - tol_band) return RegionLabel::PWR;
  return RegionLabel::ON_BARRIER;
}

RegionLabel classify(Point evader, const Coalition& coalition, const Scenario& scenario,
                     double tol_band) {
  if (!scenario.domain.contains(evader, Side::Play)) {
    throw DomainError("evader is outside the play region");
  }
  return classify(evader, build_barrier(coalition, scenario), tol_band);
}

RegionLabel oracle_classify(Point evader, std::span<const Point> pursuer_positions, double alpha,
                            double l, double tol) {
  // Reflection across the target line leaves every distance to it unchanged,
  // so virtual pursuers give the same margins.
  const auto virt = virtualize(pursuer_positions);
  const double v = maximize_margin(evader, virt, alpha, l).value;
  if (v > tol) return RegionLabel::EWR;
  if (v < -tol) return RegionLabel::PWR;
  return RegionLabel::ON_BARRIER;
}

Point RegionGrid::center(int ix, int iy) const {
  return {lo.x + (ix + 0.5) * (hi.x - lo.x) / resolution,
          lo.y + (iy + 0.5) * (hi.y - lo.y) / resolution};
}

namespace {

double boundary_distance(const std::vector<Point>& poly, Point p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % poly.size()];
    best = std::min(best, std::abs(cross(b - a, p - a)) / distance(a, b));
  }
  return best;
}

}  // namespace

RegionGrid region_grid(const Coalition& coalition, const Scenario& scenario, int resolution) {
  if (resolution < 2) throw DomainError("grid resolution must be at least 2");
  const BarrierCurve curve = build_barrier(coalition, scenario);
  RegionGrid grid;
  grid.resolution = resolution;
  scenario.domain.play_bounds(grid.lo, grid.hi);
  const std::size_t n = static_cast<std::size_t>(resolution) * resolution;
  grid.cells.resize(n, CellLabel::OUTSIDE);
  grid.on_boundary.resize(n, false);
  const auto& poly = scenario.domain.polygon();
  for (int iy = 0; iy < resolution; ++iy) {
    for (int ix = 0; ix < resolution; ++ix) {
      const Point c = grid.center(ix, iy);
      const std::size_t k = static_cast<std::size_t>(iy) * resolution + ix;
      if (!scenario.domain.contains(c, Side::Play)) continue;
      grid.on_boundary[k] = boundary_distance(poly, c) <= kGeoEps;
      switch (classify(c, curve)) {
        case RegionLabel::PWR:
          grid.cells[k] = CellLabel::PWR;
          break;
        case RegionLabel::EWR:
          grid.cells[k] = CellLabel::EWR;
          break;
        case RegionLabel::ON_BARRIER:
          grid.cells[k] = CellLabel::ON_BARRIER;
          break;
      }
    }
  }
  return grid;
}

}  // namespace reachavoid
