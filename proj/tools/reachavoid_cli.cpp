// Command-line front end: solve, classify, simulate, check.

#include <bit>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reachavoid/barrier.hpp"
#include "reachavoid/errors.hpp"
#include "reachavoid/matching.hpp"
#include "reachavoid/report.hpp"
#include "reachavoid/scalar_opt.hpp"
#include "reachavoid/scenario_io.hpp"
#include "reachavoid/simulate.hpp"
#include "reachavoid/svg.hpp"
#include "reachavoid/winning_region.hpp"

namespace ra = reachavoid;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitOracle = 3;
constexpr int kExitInvariant = 4;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ra::DomainError("cannot write " + path);
  out << text;
}

ra::Scenario load(const std::string& path) { return ra::parse_scenario(ra::read_file(path)); }

ra::Coalition coalition_arg(std::uint32_t code, const ra::Scenario& s) {
  if (code == 0) return ra::Coalition(ra::coalition_count(s.num_pursuers()));
  if (code > ra::coalition_count(s.num_pursuers())) {
    throw ra::DomainError("coalition code names pursuers that do not exist");
  }
  return ra::Coalition(code);
}

std::vector<ra::Point> positions(const ra::Coalition& c, const ra::Scenario& s) {
  std::vector<ra::Point> out;
  for (int i : c.members()) out.push_back(s.pursuers[i]);
  return out;
}

json members(const ra::Coalition& c) {
  json out = json::array();
  for (int m : c.members()) out.push_back(m + 1);
  return out;
}

struct SolveArgs {
  std::string scenario, out, svg;
  bool oracle = false;
  int grid = 80;
  std::uint64_t seed = 0;
};

int run_solve(const SolveArgs& a) {
  const ra::Scenario s = load(a.scenario);
  ra::SolveOptions opt;
  opt.oracle = a.oracle;
  const ra::SolveResult res = ra::solve(s, opt);
  write_text(a.out, ra::emit_report(ra::make_report(s, res, opt)));
  if (!a.svg.empty()) {
    ra::SvgLayers layers;
    const ra::Coalition team(ra::coalition_count(s.num_pursuers()));
    layers.barriers.push_back(res.team_barrier);
    for (const auto& p : res.assignment.pairs_one) {
      layers.barriers.push_back(ra::build_barrier(ra::Coalition(1u << p[0]), s));
    }
    for (const auto& p : res.assignment.pairs_two) {
      layers.barriers.push_back(ra::build_barrier(ra::Coalition((1u << p[0]) | (1u << p[1])), s));
    }
    if (a.grid >= 2) layers.grid = ra::region_grid(team, s, a.grid);
    layers.assignment = res.assignment;
    write_text(a.svg, ra::render_svg(s, layers));
  }
  if (!res.mismatches.empty()) {
    std::cerr << "oracle disagreement on " << res.mismatches.size() << " classification(s)\n";
    return kExitOracle;
  }
  return kExitOk;
}

struct ClassifyArgs {
  std::string scenario;
  int evader = 0;
  std::vector<double> point;
  std::uint32_t coalition = 0;
  double tol_band = ra::kDefaultTolBand;
  bool oracle = false;
};

int run_classify(const ClassifyArgs& a) {
  const ra::Scenario s = load(a.scenario);
  ra::Point e;
  if (!a.point.empty()) {
    if (a.point.size() != 2) throw ra::DomainError("--point takes two numbers");
    e = s.frame.apply({a.point[0], a.point[1]});
  } else {
    if (a.evader < 1 || static_cast<std::size_t>(a.evader) > s.num_evaders()) {
      throw ra::DomainError("--evader must name an evader (1-based)");
    }
    e = s.evaders[a.evader - 1];
  }
  const ra::Coalition c = coalition_arg(a.coalition, s);
  const ra::RegionLabel label = ra::classify(e, c, s, a.tol_band);
  const ra::BarrierCurve curve = ra::build_barrier(c, s);
  json out;
  out["coalition"] = members(c);
  out["evader"] = json::array({ra::round12(e.x), ra::round12(e.y)});
  out["label"] = ra::to_string(label);
  if (auto y = ra::barrier_y(curve, e.x)) {
    out["barrier_y"] = ra::round12(*y);
  } else {
    out["barrier_y"] = nullptr;
  }
  int code = kExitOk;
  if (a.oracle) {
    const auto pos = positions(c, s);
    const double m =
        ra::maximize_margin(e, ra::virtualize(pos), s.alpha, s.target_length()).value;
    const ra::RegionLabel o = ra::oracle_classify(e, pos, s.alpha, s.target_length(), a.tol_band);
    out["oracle_label"] = ra::to_string(o);
    out["margin"] = ra::round12(m);
    if (std::abs(m) > ra::kOracleMarginFloor && o != label) code = kExitOracle;
  }
  std::cout << out.dump(2) << "\n";
  return code;
}

struct SimulateArgs {
  std::string scenario, trace, out;
  int evader = 0;
  std::uint32_t coalition = 0;
  ra::EngagementConfig config;
};

int run_simulate(const SimulateArgs& a) {
  const ra::Scenario s = load(a.scenario);
  const ra::Coalition c = coalition_arg(a.coalition, s);
  const auto pos = positions(c, s);
  std::vector<std::size_t> which;
  if (a.evader == 0) {
    for (std::size_t j = 0; j < s.num_evaders(); ++j) which.push_back(j);
  } else if (a.evader >= 1 && static_cast<std::size_t>(a.evader) <= s.num_evaders()) {
    which.push_back(static_cast<std::size_t>(a.evader - 1));
  } else {
    throw ra::DomainError("--evader must name an evader (1-based)");
  }

  std::vector<ra::TraceRow> rows;
  json outcomes = json::array();
  for (std::size_t j : which) {
    const ra::Outcome o = ra::run_engagement(pos, s.evaders[j], s, a.config,
                                             a.trace.empty() ? nullptr : &rows,
                                             static_cast<int>(j + 1));
    json r;
    r["evader"] = j + 1;
    r["outcome"] = ra::to_string(o.kind);
    r["time"] = ra::round12(o.time);
    r["otp_x"] = ra::round12(o.otp_x);
    r["label"] = ra::to_string(ra::classify(s.evaders[j], c, s));
    if (o.kind == ra::OutcomeKind::REACHED_TARGET) {
      r["payoff_j"] = ra::round12(o.payoff_j);
    } else {
      r["payoff_j"] = nullptr;
    }
    if (o.captor >= 0) {
      r["captor"] = c.members()[static_cast<std::size_t>(o.captor)] + 1;
    }
    outcomes.push_back(r);
  }
  json out;
  out["coalition"] = members(c);
  out["config"] = {{"dt", a.config.dt},
                   {"capture_radius", a.config.capture_radius},
                   {"max_time", a.config.max_time}};
  out["engagements"] = outcomes;
  write_text(a.out, out.dump(2) + "\n");

  if (!a.trace.empty()) {
    // Trace rows are written in the input frame so they overlay the scenario.
    std::string text = "t,id,x,y\n";
    char buf[160];
    for (const auto& row : rows) {
      const ra::Point p = s.frame.inverse(row.p);
      std::snprintf(buf, sizeof buf, "%.12g,%s,%.12g,%.12g\n", row.t, row.id.c_str(), p.x, p.y);
      text += buf;
    }
    write_text(a.trace, text);
  }
  return kExitOk;
}

struct CheckArgs {
  std::string scenario;
  std::uint64_t seed = 1;
  int samples = 200;
};

int run_check(const CheckArgs& a) {
  const ra::Scenario s = load(a.scenario);
  const std::size_t np = s.num_pursuers();
  const double l = s.target_length();
  json checks = json::object();
  int code = kExitOk;

  std::vector<ra::Coalition> coalitions = ra::execution_coalitions(np);
  if (np >= 3) coalitions.emplace_back(ra::coalition_count(np));

  // Continuity of every barrier.
  double gap = 0.0;
  for (const auto& c : coalitions) gap = std::max(gap, ra::max_junction_gap(ra::build_barrier(c, s)));
  checks["continuity"] = {{"max_gap", gap}, {"pass", gap <= 1e-9}};
  if (gap > 1e-9) code = kExitInvariant;

  // Analytic labels against the margin oracle at the evaders and at random
  // points of the play region.
  std::mt19937_64 rng(a.seed);
  ra::Point lo, hi;
  s.domain.play_bounds(lo, hi);
  std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
  std::vector<ra::Point> probes = s.evaders;
  while (static_cast<int>(probes.size()) < static_cast<int>(s.num_evaders()) + a.samples) {
    const ra::Point p{ux(rng), uy(rng)};
    if (s.domain.contains(p, ra::Side::Play) && p.y < -1e-9) probes.push_back(p);
  }
  std::size_t compared = 0, mismatched = 0;
  for (const auto& c : coalitions) {
    const ra::BarrierCurve curve = ra::build_barrier(c, s);
    const auto pos = positions(c, s);
    const auto virt = ra::virtualize(pos);
    for (const ra::Point& p : probes) {
      const double m = ra::maximize_margin(p, virt, s.alpha, l).value;
      if (std::abs(m) <= ra::kOracleMarginFloor) continue;
      ++compared;
      if (ra::classify(p, curve) != ra::oracle_classify(p, pos, s.alpha, l)) ++mismatched;
    }
  }
  checks["oracle"] = {{"compared", compared}, {"mismatched", mismatched}, {"pass", mismatched == 0}};
  if (mismatched && code == kExitOk) code = kExitOracle;

  // Matching: feasibility, and exhaustive optimality where enumeration is cheap.
  const ra::SolveResult res = ra::solve(s);
  const ra::IlpInstance ilp = ra::build_ilp(res.prior, np, s.num_evaders());
  bool feasible = ra::is_feasible(ilp, res.assignment.z_star);
  json ilp_check = {{"q", res.assignment.q}, {"feasible", feasible}};
  bool ilp_ok = feasible;
  if (ilp.num_vars() <= 24) {
    int best = 0;
    std::vector<std::uint8_t> z(ilp.num_vars());
    for (std::uint64_t mask = 0; mask < (1ull << ilp.num_vars()); ++mask) {
      for (std::size_t v = 0; v < z.size(); ++v) z[v] = (mask >> v) & 1u;
      if (ra::is_feasible(ilp, z)) best = std::max(best, static_cast<int>(std::popcount(mask)));
    }
    ilp_check["exhaustive_q"] = best;
    ilp_ok = ilp_ok && best == res.assignment.q;
  }
  ilp_check["pass"] = ilp_ok;
  checks["matching"] = ilp_check;
  if (!ilp_ok) code = kExitInvariant;

  // Degeneration: every evader the whole team captures is captured by a pair.
  json degen = json::array();
  if (np >= 3) {
    const ra::Coalition team(ra::coalition_count(np));
    for (std::size_t j = 0; j < s.num_evaders(); ++j) {
      if (ra::classify(s.evaders[j], team, s) != ra::RegionLabel::PWR) continue;
      const ra::Coalition w = ra::degeneration_witness(s, team, j);
      degen.push_back({{"evader", j + 1}, {"pair", members(w)}});
    }
  }
  checks["degeneration"] = {{"witnesses", degen}, {"pass", true}};

  json out = {{"scenario", a.scenario}, {"seed", a.seed}, {"checks", checks}};
  std::cout << out.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barriers, winning regions and pursuer assignment for reach-avoid games"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "barriers, prior information and maximum matching");
  solve->add_option("--scenario", sa.scenario, "scenario JSON")->required();
  solve->add_option("--out", sa.out, "report path (stdout when omitted)");
  solve->add_option("--svg", sa.svg, "SVG output path");
  solve->add_flag("--oracle", sa.oracle, "cross-check every label with the margin oracle");
  solve->add_option("--grid", sa.grid, "region grid resolution for the SVG")->capture_default_str();
  solve->add_option("--seed", sa.seed, "random seed (solve itself is deterministic)");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "label one evader against a coalition");
  classify->add_option("--scenario", ca.scenario, "scenario JSON")->required();
  auto* ev = classify->add_option("--evader", ca.evader, "evader index (1-based)");
  classify->add_option("--point", ca.point, "evader position x y in the input frame")
      ->expected(2)
      ->excludes(ev);
  classify->add_option("--coalition", ca.coalition, "coalition bitmask (0 = all pursuers)");
  classify->add_option("--tol-band", ca.tol_band, "barrier band half-width")->capture_default_str();
  classify->add_flag("--oracle", ca.oracle, "also run the margin oracle");

  SimulateArgs ma;
  auto* simulate = app.add_subcommand("simulate", "run straight-line engagements");
  simulate->add_option("--scenario", ma.scenario, "scenario JSON")->required();
  simulate->add_option("--evader", ma.evader, "evader index (1-based, 0 = all)");
  simulate->add_option("--coalition", ma.coalition, "coalition bitmask (0 = all pursuers)");
  simulate->add_option("--dt", ma.config.dt, "time step")->capture_default_str();
  simulate->add_option("--capture-radius", ma.config.capture_radius, "capture radius")
      ->capture_default_str();
  simulate->add_option("--max-time", ma.config.max_time, "time limit")->capture_default_str();
  simulate->add_option("--trace", ma.trace, "CSV trace path (t,id,x,y)");
  simulate->add_option("--out", ma.out, "result path (stdout when omitted)");

  CheckArgs ka;
  auto* check = app.add_subcommand("check", "run invariant and oracle checks on a scenario");
  check->add_option("--scenario", ka.scenario, "scenario JSON")->required();
  check->add_option("--seed", ka.seed, "seed for random probe points")->capture_default_str();
  check->add_option("--samples", ka.samples, "random probe points")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) return run_solve(sa);
    if (*classify) return run_classify(ca);
    if (*simulate) return run_simulate(ma);
    if (*check) return run_check(ka);
  } catch (const ra::ScenarioError& e) {
    for (const auto& v : e.violations()) {
      std::cerr << "error: " << ra::to_string(v.kind) << ": " << v.message << "\n";
    }
    return kExitInput;
  } catch (const ra::VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitOracle;
  } catch (const ra::InvariantBreach& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const ra::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
