#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "reachavoid/barrier.hpp"
#include "reachavoid/matching.hpp"
#include "reachavoid/scenario.hpp"
#include "reachavoid/winning_region.hpp"

namespace reachavoid {

inline constexpr const char* kToolVersion = "1.0.0";
// Oracle and analytic labels are only compared where the margin is at least
// this far from zero.
inline constexpr double kOracleMarginFloor = 1e-5;

struct SolveOptions {
  bool oracle = false;
  double tol_band = kDefaultTolBand;
};

struct OracleMismatch {
  Coalition coalition;
  std::size_t evader;
  RegionLabel analytic;
  RegionLabel oracle;
  double margin;
};

struct SolveResult {
  std::vector<std::pair<Coalition, BarrierCurve>> barriers;  // execution coalitions, block order
  BarrierCurve team_barrier;                                 // all pursuers together
  std::vector<RegionLabel> team_labels;                      // per evader
  PriorInfoVector prior;
  AssignmentSolution assignment;
  bool oracle_checked = false;
  std::size_t oracle_comparisons = 0;
  std::vector<OracleMismatch> mismatches;
};

SolveResult solve(const Scenario& scenario, const SolveOptions& options = {});

nlohmann::json barrier_json(const BarrierCurve& curve);

// Full report: scenario echo, barriers, prior vector, assignment, per-evader
// labels and, when run, the oracle cross-check. Pair indices are 1-based.
nlohmann::json make_report(const Scenario& scenario, const SolveResult& result,
                           const SolveOptions& options);

// Deterministic text: sorted keys, numbers already rounded to 12 significant
// digits, trailing newline.
std::string emit_report(const nlohmann::json& report);

}  // namespace reachavoid
