#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "reachavoid/geometry.hpp"

namespace reachavoid {

inline constexpr double kDefaultTolX = 1e-10;

// Race margin at the target point (xp, 0): the pursuer's remaining distance to
// the evader at the instant the evader arrives, when both head straight for
// the point. Positive means the evader arrives first.
double g1(double xp, Point evader, Point pursuer, double alpha);

// d g1 / d xp and d^2 g1 / d xp^2.
double g1_derivative(double xp, Point evader, Point pursuer, double alpha);
double g1_second_derivative(double xp, Point evader, Point pursuer, double alpha);

// Minimum of g1 over the pursuers: the payoff the evader gets at (xp, 0)
// against the whole coalition.
double coalition_margin(double xp, Point evader, std::span<const Point> pursuers, double alpha);

// Abscissae in (0, l) where the closest pursuer to the target line changes,
// sorted and de-duplicated.
std::vector<double> margin_breakpoints(std::span<const Point> pursuers, double l);

struct MarginMax {
  double x_star = 0.0;
  double value = 0.0;
};

// Global maximum of coalition_margin over [0, l]. The interval is cut at the
// breakpoints; on each piece a single pursuer is closest, and the piece is
// scanned for sign changes of the slope that are then bisected well below
// tol_x. Endpoints and breakpoints are always candidates.
MarginMax maximize_margin(Point evader, std::span<const Point> pursuers, double alpha, double l,
                          double tol_x = kDefaultTolX);

// Interval where the Apollonius circle of (evader, pursuer) meets y = 0, or
// empty when it does not reach the line.
std::optional<std::pair<double, double>> apollonius_chord(Point evader, Point pursuer,
                                                          double alpha);

// The unique stationary point of g1 inside the chord [c1, c2], found by
// Newton iteration safeguarded with bisection.
double solve_quartic_otp(Point evader, Point pursuer, double alpha, double c1, double c2);

}  // namespace reachavoid
