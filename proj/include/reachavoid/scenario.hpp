#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reachavoid/errors.hpp"
#include "reachavoid/geometry.hpp"

namespace reachavoid {

// A validated game instance in the canonical frame.
struct Scenario {
  GameDomain domain;
  double alpha = 0.5;
  std::vector<Point> pursuers;
  std::vector<Point> evaders;
  // Maps the input frame onto the canonical one; identity for canonical input.
  FrameTransform frame;

  std::size_t num_pursuers() const { return pursuers.size(); }
  std::size_t num_evaders() const { return evaders.size(); }
  double target_length() const { return domain.target_length(); }
};

enum class ViolationKind {
  Syntax,
  Schema,
  NonConvex,
  Chord,
  Assumption1,  // distinct initial positions
  Assumption3,  // evaders in the play region, pursuers in the domain
  Assumption4,  // 0 < alpha < 1
  VirtualCollision,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

const char* to_string(ViolationKind kind);

// Thrown when a scenario fails validation; carries every violation found.
class ScenarioError : public DomainError {
 public:
  explicit ScenarioError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Convexity and chord checks on a canonical-frame polygon.
std::vector<Violation> validate_domain(const std::vector<Point>& polygon, double target_length);

// Checks player placement and speed ratio against the domain. Returns every
// violation found; an empty list means the scenario is admissible.
std::vector<Violation> validate_players(const GameDomain& domain, double alpha,
                                        const std::vector<Point>& pursuers,
                                        const std::vector<Point>& evaders);

// Builds a scenario and throws ScenarioError listing all violations.
Scenario make_scenario(GameDomain domain, double alpha, std::vector<Point> pursuers,
                       std::vector<Point> evaders, FrameTransform frame = {});

}  // namespace reachavoid
