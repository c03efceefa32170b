#include "reachavoid/scenario.hpp"

#include <cmath>
#include <sstream>

#include "reachavoid/barrier.hpp"

namespace reachavoid {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Syntax:
      return "syntax";
    case ViolationKind::Schema:
      return "schema";
    case ViolationKind::NonConvex:
      return "nonconvex-domain";
    case ViolationKind::Chord:
      return "chord";
    case ViolationKind::Assumption1:
      return "Assumption 1";
    case ViolationKind::Assumption3:
      return "Assumption 3";
    case ViolationKind::Assumption4:
      return "Assumption 4";
    case ViolationKind::VirtualCollision:
      return "virtual-collision";
  }
  return "?";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << to_string(violations[i].kind) << ": " << violations[i].message;
  }
  return os.str();
}

std::string describe(const char* role, std::size_t index, Point p) {
  std::ostringstream os;
  os << role << ' ' << index + 1 << " at (" << p.x << ", " << p.y << ")";
  return os.str();
}

}  // namespace

ScenarioError::ScenarioError(std::vector<Violation> violations)
    : DomainError(summarize(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate_domain(const std::vector<Point>& polygon, double target_length) {
  std::vector<Violation> out;
  for (const Point& v : polygon) {
    if (!is_finite(v)) {
      out.push_back({ViolationKind::Schema, "domain vertex is not finite"});
      return out;
    }
  }
  if (!is_convex(polygon)) {
    out.push_back({ViolationKind::NonConvex, "domain polygon is not convex"});
    return out;
  }
  try {
    GameDomain domain(polygon, target_length);
  } catch (const DomainError& e) {
    out.push_back({ViolationKind::Chord, e.what()});
  }
  return out;
}

std::vector<Violation> validate_players(const GameDomain& domain, double alpha,
                                        const std::vector<Point>& pursuers,
                                        const std::vector<Point>& evaders) {
  std::vector<Violation> out;
  if (!(std::isfinite(alpha) && alpha > 0 && alpha < 1)) {
    out.push_back({ViolationKind::Assumption4, "speed ratio alpha must satisfy 0 < alpha < 1"});
  }
  if (pursuers.empty()) out.push_back({ViolationKind::Schema, "at least one pursuer is required"});
  if (evaders.empty()) out.push_back({ViolationKind::Schema, "at least one evader is required"});
  if (pursuers.size() > Coalition::kMaxPursuers) {
    out.push_back({ViolationKind::Schema, "too many pursuers"});
  }

  struct Tagged {
    const char* role;
    std::size_t index;
    Point p;
  };
  std::vector<Tagged> all;
  for (std::size_t i = 0; i < pursuers.size(); ++i) all.push_back({"pursuer", i, pursuers[i]});
  for (std::size_t i = 0; i < evaders.size(); ++i) all.push_back({"evader", i, evaders[i]});
  bool finite = true;
  for (const auto& t : all) {
    if (!is_finite(t.p)) {
      out.push_back({ViolationKind::Schema, describe(t.role, t.index, t.p) + " is not finite"});
      finite = false;
    }
  }
  if (!finite) return out;

  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (distance(all[a].p, all[b].p) <= kGeoEps) {
        out.push_back({ViolationKind::Assumption1, describe(all[a].role, all[a].index, all[a].p) +
                                                       " coincides with " +
                                                       describe(all[b].role, all[b].index, all[b].p)});
      }
    }
  }
  for (std::size_t i = 0; i < pursuers.size(); ++i) {
    if (!domain.contains(pursuers[i], Side::Any)) {
      out.push_back({ViolationKind::Assumption3,
                     describe("pursuer", i, pursuers[i]) + " is outside the domain"});
    }
  }
  for (std::size_t i = 0; i < evaders.size(); ++i) {
    if (!domain.contains(evaders[i], Side::Play)) {
      out.push_back({ViolationKind::Assumption3,
                     describe("evader", i, evaders[i]) + " is outside the play region"});
    }
  }
  // A reflected pursuer may sit on its own original (y = 0) but on nobody else.
  for (std::size_t i = 0; i < pursuers.size(); ++i) {
    for (std::size_t j = i + 1; j < pursuers.size(); ++j) {
      const Point vi{pursuers[i].x, -std::abs(pursuers[i].y)};
      const Point vj{pursuers[j].x, -std::abs(pursuers[j].y)};
      if (distance(vi, vj) <= kGeoEps && distance(pursuers[i], pursuers[j]) > kGeoEps) {
        out.push_back({ViolationKind::VirtualCollision,
                       describe("pursuer", i, pursuers[i]) + " and " +
                           describe("pursuer", j, pursuers[j]) + " share a virtual position"});
      }
    }
  }
  return out;
}

Scenario make_scenario(GameDomain domain, double alpha, std::vector<Point> pursuers,
                       std::vector<Point> evaders, FrameTransform frame) {
  auto violations = validate_players(domain, alpha, pursuers, evaders);
  if (!violations.empty()) throw ScenarioError(std::move(violations));
  return Scenario{std::move(domain), alpha, std::move(pursuers), std::move(evaders), frame};
}

}  // namespace reachavoid
