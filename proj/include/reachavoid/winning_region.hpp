#pragma once

#include <span>
#include <vector>

#include "reachavoid/barrier.hpp"
#include "reachavoid/geometry.hpp"
#include "reachavoid/scenario.hpp"

namespace reachavoid {

inline constexpr double kDefaultTolBand = 1e-6;

enum class RegionLabel { PWR, EWR, ON_BARRIER };

const char* to_string(RegionLabel label);

// Label from a prebuilt barrier. No domain check; the caller guarantees the
// evader lies in the play region.
RegionLabel classify(Point evader, const BarrierCurve& curve, double tol_band = kDefaultTolBand);

// Analytic classification of an evader in the play region against a
// coalition. Throws DomainError if the evader is not in the play region.
RegionLabel classify(Point evader, const Coalition& coalition, const Scenario& scenario,
                     double tol_band = kDefaultTolBand);

// Independent path: sign of the best race margin over the target line.
RegionLabel oracle_classify(Point evader, std::span<const Point> pursuer_positions, double alpha,
                            double l, double tol = kDefaultTolBand);

enum class CellLabel { PWR, EWR, ON_BARRIER, OUTSIDE };

const char* to_string(CellLabel label);

// Cell-centre labels on a resolution x resolution grid over the bounding box
// of the play region. Row-major, row 0 at the bottom.
struct RegionGrid {
  int resolution = 0;
  Point lo;
  Point hi;
  std::vector<CellLabel> cells;
  // Cell centres within kGeoEps of the domain boundary.
  std::vector<bool> on_boundary;

  Point center(int ix, int iy) const;
  CellLabel at(int ix, int iy) const { return cells[static_cast<std::size_t>(iy) * resolution + ix]; }
};

RegionGrid region_grid(const Coalition& coalition, const Scenario& scenario, int resolution);

}  // namespace reachavoid
