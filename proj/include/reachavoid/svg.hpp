#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reachavoid/barrier.hpp"
#include "reachavoid/matching.hpp"
#include "reachavoid/scenario.hpp"
#include "reachavoid/winning_region.hpp"

namespace reachavoid {

// Canonical-frame coordinates to SVG pixels (y axis flipped).
struct SvgView {
  Point lo;
  Point hi;
  double scale = 100.0;
  double margin = 20.0;

  static SvgView fit(const Scenario& scenario, double width_px = 600.0);
  Point to_px(Point p) const;
  double width() const;
  double height() const;
};

inline constexpr int kSvgSamplesPerPiece = 128;

// Polyline samples of one piece inside the play region: each inner vector is
// a run of consecutive samples, all within [x_lo, x_hi].
std::vector<std::vector<Point>> sample_piece(const CurvePiece& piece, const GameDomain& domain,
                                             int samples = kSvgSamplesPerPiece);

struct SvgLayers {
  std::vector<BarrierCurve> barriers;
  std::optional<RegionGrid> grid;
  std::optional<AssignmentSolution> assignment;
};

std::string render_svg(const Scenario& scenario, const SvgLayers& layers);

}  // namespace reachavoid
