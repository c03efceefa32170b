#include "reachavoid/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "reachavoid/barrier.hpp"
#include "reachavoid/errors.hpp"
#include "reachavoid/scalar_opt.hpp"

namespace reachavoid {

void EngagementConfig::validate(double alpha) const {
  if (!(dt > 0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
  if (!(capture_radius >= 0) || !std::isfinite(capture_radius)) {
    throw DomainError("capture radius must be non-negative");
  }
  if (!(max_time > 0)) throw DomainError("max_time must be positive");
  if (capture_radius > 0 && dt > capture_radius / (1.0 + alpha)) {
    throw DomainError("dt must not exceed capture_radius / (1 + alpha)");
  }
}

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::CAPTURED:
      return "CAPTURED";
    case OutcomeKind::REACHED_TARGET:
      return "REACHED_TARGET";
    case OutcomeKind::TIMEOUT:
      return "TIMEOUT";
  }
  return "?";
}

double evader_otp(Point evader, std::span<const Point> pursuer_positions, double alpha, double l) {
  return maximize_margin(evader, virtualize(pursuer_positions), alpha, l).x_star;
}

namespace {

Point advance(Point from, Point to, double travelled) {
  const double d = distance(from, to);
  if (travelled >= d) return to;
  return from + (to - from) * (travelled / d);
}

}  // namespace

Outcome run_engagement(std::span<const Point> pursuer_positions, Point evader,
                       const Scenario& scenario, const EngagementConfig& config,
                       std::vector<TraceRow>* trace, int evader_id) {
  const double alpha = scenario.alpha;
  config.validate(alpha);
  if (pursuer_positions.empty()) throw DomainError("engagement needs at least one pursuer");
  if (!scenario.domain.contains(evader, Side::Play)) {
    throw DomainError("evader is outside the play region");
  }
  const double l = scenario.target_length();
  const double xs = evader_otp(evader, pursuer_positions, alpha, l);
  const Point otp{xs, 0.0};
  const double t_arrive = distance(evader, otp) / alpha;

  Outcome out;
  out.otp_x = xs;
  out.payoff_j = std::numeric_limits<double>::quiet_NaN();
  std::vector<Point> pursuers(pursuer_positions.begin(), pursuer_positions.end());

  auto state_at = [&](double t, Point& e, std::vector<Point>& ps) {
    e = advance(evader, otp, alpha * t);
    for (std::size_t i = 0; i < ps.size(); ++i) ps[i] = advance(pursuer_positions[i], otp, t);
  };
  auto record = [&](double t, Point e, const std::vector<Point>& ps) {
    if (!trace) return;
    trace->push_back({t, "E" + std::to_string(evader_id), e});
    for (std::size_t i = 0; i < ps.size(); ++i) trace->push_back({t, "P" + std::to_string(i + 1), ps[i]});
  };
  auto closest = [&](Point e, const std::vector<Point>& ps, int& who) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const double d = distance(e, ps[i]);
      if (d < best) {
        best = d;
        who = static_cast<int>(i);
      }
    }
    return best;
  };

  Point e = evader;
  const auto steps = static_cast<long long>(std::ceil(config.max_time / config.dt));
  for (long long k = 0; k <= steps; ++k) {
    double t = std::min(static_cast<double>(k) * config.dt, config.max_time);
    const bool arriving = t >= t_arrive;
    if (arriving) t = t_arrive;
    state_at(t, e, pursuers);
    record(t, e, pursuers);
    int who = -1;
    const double d = closest(e, pursuers, who);
    out.time = t;
    out.evader_final = e;
    out.pursuers_final = pursuers;
    if (d <= config.capture_radius) {
      out.kind = OutcomeKind::CAPTURED;
      out.captor = who;
      return out;
    }
    if (arriving) {
      out.kind = OutcomeKind::REACHED_TARGET;
      out.payoff_j = d;
      return out;
    }
    if (t >= config.max_time) break;
  }
  out.kind = OutcomeKind::TIMEOUT;
  return out;
}

}  // namespace reachavoid
