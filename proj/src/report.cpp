#include "reachavoid/report.hpp"

#include "reachavoid/geometry.hpp"
#include "reachavoid/scalar_opt.hpp"
#include "reachavoid/scenario_io.hpp"

namespace reachavoid {

using nlohmann::json;

SolveResult solve(const Scenario& scenario, const SolveOptions& options) {
  SolveResult res;
  const std::size_t np = scenario.num_pursuers();
  const std::size_t ne = scenario.num_evaders();
  for (const Coalition& c : execution_coalitions(np)) {
    res.barriers.emplace_back(c, build_barrier(c, scenario));
  }
  res.team_barrier = build_barrier(Coalition(coalition_count(np)), scenario);
  for (const Point& e : scenario.evaders) {
    res.team_labels.push_back(classify(e, res.team_barrier, options.tol_band));
  }

  res.prior.num_pursuers = np;
  res.prior.num_evaders = ne;
  for (const auto& [c, curve] : res.barriers) {
    for (const Point& e : scenario.evaders) {
      res.prior.bits.push_back(classify(e, curve, options.tol_band) == RegionLabel::PWR ? 1 : 0);
    }
  }
  res.assignment = solve_ilp(build_ilp(res.prior, np, ne));

  if (options.oracle) {
    res.oracle_checked = true;
    auto check = [&](const Coalition& c, const BarrierCurve& curve) {
      std::vector<Point> pos;
      for (int i : c.members()) pos.push_back(scenario.pursuers[i]);
      const auto virt = virtualize(pos);
      for (std::size_t j = 0; j < ne; ++j) {
        const Point e = scenario.evaders[j];
        const double m = maximize_margin(e, virt, scenario.alpha, scenario.target_length()).value;
        if (std::abs(m) <= kOracleMarginFloor) continue;
        ++res.oracle_comparisons;
        const RegionLabel a = classify(e, curve, options.tol_band);
        const RegionLabel o =
            oracle_classify(e, pos, scenario.alpha, scenario.target_length(), options.tol_band);
        if (a != o) res.mismatches.push_back({c, j, a, o, m});
      }
    };
    for (const auto& [c, curve] : res.barriers) check(c, curve);
    check(Coalition(coalition_count(np)), res.team_barrier);
  }
  return res;
}

namespace {

json members_json(const Coalition& c) {
  json out = json::array();
  for (int m : c.members()) out.push_back(m + 1);
  return out;
}

}  // namespace

json barrier_json(const BarrierCurve& curve) {
  json pieces = json::array();
  for (const CurvePiece& p : curve.pieces) {
    json j;
    j["kind"] = to_string(p.kind);
    j["x_lo"] = round12(p.x_lo);
    j["x_hi"] = round12(p.x_hi);
    j["lo_closed"] = p.lo_closed;
    j["hi_closed"] = p.hi_closed;
    if (p.kind == PieceKind::QuadraticArc) {
      j["generator"] = json::array({round12(p.generator.x), round12(p.generator.y)});
    } else {
      j["center"] = json::array({round12(p.center_x), 0.0});
      j["radius"] = round12(p.radius);
    }
    json who = json::array({p.pursuer + 1});
    if (p.second_pursuer >= 0) who.push_back(p.second_pursuer + 1);
    j["pursuers"] = who;
    pieces.push_back(j);
  }
  json junctions = json::array();
  for (double x : curve.junctions()) junctions.push_back(round12(x));
  return {{"active", members_json(curve.generating)},
          {"x_extent", json::array({round12(curve.x_min), round12(curve.x_max)})},
          {"junctions", junctions},
          {"pieces", pieces}};
}

json make_report(const Scenario& scenario, const SolveResult& res, const SolveOptions& options) {
  json report;
  report["tool"] = {{"name", "reachavoid"}, {"version", kToolVersion}};
  report["tolerances"] = {{"geometry", kGeoEps}, {"tol_band", options.tol_band},
                          {"tol_x", kDefaultTolX}};
  report["scenario"] = echo_scenario(scenario);
  const FrameTransform& f = scenario.frame;
  report["frame"] = {
      {"origin", json::array({round12(f.origin().x), round12(f.origin().y)})},
      {"x_axis", json::array({round12(f.x_axis().x), round12(f.x_axis().y)})},
      {"y_axis", json::array({round12(f.y_axis().x), round12(f.y_axis().y)})},
      {"note", "barrier and label coordinates are in the canonical frame"}};

  json barriers = json::array();
  for (const auto& [c, curve] : res.barriers) {
    json b = barrier_json(curve);
    b["coalition"] = members_json(c);
    b["code"] = c.code();
    barriers.push_back(b);
  }
  report["barriers"] = barriers;
  json team = barrier_json(res.team_barrier);
  team["coalition"] = members_json(Coalition(coalition_count(scenario.num_pursuers())));
  report["team_barrier"] = team;

  json layout = json::array();
  for (const auto& [c, curve] : res.barriers) layout.push_back(members_json(c));
  json bits = json::array();
  for (auto b : res.prior.bits) bits.push_back(static_cast<int>(b));
  report["prior"] = {{"layout", layout}, {"num_evaders", res.prior.num_evaders}, {"bits", bits}};

  json z = json::array();
  for (auto b : res.assignment.z_star) z.push_back(static_cast<int>(b));
  json one = json::array();
  for (const auto& p : res.assignment.pairs_one) one.push_back(json::array({p[0] + 1, p[1] + 1}));
  json two = json::array();
  for (const auto& p : res.assignment.pairs_two) {
    two.push_back(json::array({p[0] + 1, p[1] + 1, p[2] + 1}));
  }
  report["assignment"] = {{"q", res.assignment.q}, {"z_star", z}, {"pairs_one", one},
                          {"pairs_two", two}};

  json labels = json::array();
  for (std::size_t j = 0; j < res.team_labels.size(); ++j) {
    const Point e = scenario.evaders[j];
    const auto virt = virtualize(scenario.pursuers);
    const MarginMax mm = maximize_margin(e, virt, scenario.alpha, scenario.target_length());
    labels.push_back({{"evader", j + 1},
                      {"team_label", to_string(res.team_labels[j])},
                      {"otp_x", round12(mm.x_star)},
                      {"margin", round12(mm.value)}});
  }
  report["classifications"] = labels;

  if (res.oracle_checked) {
    json mism = json::array();
    for (const auto& m : res.mismatches) {
      mism.push_back({{"coalition", members_json(m.coalition)},
                      {"evader", m.evader + 1},
                      {"analytic", to_string(m.analytic)},
                      {"oracle", to_string(m.oracle)},
                      {"margin", round12(m.margin)}});
    }
    report["oracle"] = {{"comparisons", res.oracle_comparisons},
                        {"margin_floor", kOracleMarginFloor},
                        {"mismatches", mism}};
  }
  return report;
}

std::string emit_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace reachavoid
