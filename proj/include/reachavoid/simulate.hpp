#pragma once

#include <span>
#include <string>
#include <vector>

#include "reachavoid/geometry.hpp"
#include "reachavoid/scenario.hpp"

namespace reachavoid {

struct EngagementConfig {
  double dt = 1e-4;
  double capture_radius = 1e-3;
  double max_time = 100.0;

  // Throws DomainError unless dt > 0, capture_radius >= 0, max_time > 0 and,
  // for a positive capture radius, dt <= capture_radius / (1 + alpha).
  void validate(double alpha) const;
};

enum class OutcomeKind { CAPTURED, REACHED_TARGET, TIMEOUT };

const char* to_string(OutcomeKind kind);

struct Outcome {
  OutcomeKind kind = OutcomeKind::TIMEOUT;
  double time = 0.0;
  Point evader_final;
  std::vector<Point> pursuers_final;
  // Smallest evader-pursuer distance at arrival; NaN unless REACHED_TARGET.
  double payoff_j = 0.0;
  double otp_x = 0.0;
  // Pursuer that made the capture, -1 otherwise.
  int captor = -1;
};

// One row of a trajectory trace. id is "E<k>" or "P<k>" (1-based).
struct TraceRow {
  double t;
  std::string id;
  Point p;
};

// Best aim point on the target line against the given pursuers.
double evader_otp(Point evader, std::span<const Point> pursuer_positions, double alpha, double l);

// Straight-line engagement: the evader runs at speed alpha to its aim point,
// every pursuer runs at speed 1 to the same point and waits there. Positions
// are in the canonical frame. When `trace` is given, a row per player is
// appended at every step.
Outcome run_engagement(std::span<const Point> pursuer_positions, Point evader,
                       const Scenario& scenario, const EngagementConfig& config,
                       std::vector<TraceRow>* trace = nullptr, int evader_id = 1);

}  // namespace reachavoid
