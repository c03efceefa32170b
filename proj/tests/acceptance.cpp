// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "reachavoid/barrier.hpp"
#include "reachavoid/errors.hpp"
#include "reachavoid/matching.hpp"
#include "reachavoid/report.hpp"
#include "reachavoid/scalar_opt.hpp"
#include "reachavoid/scenario_io.hpp"
#include "reachavoid/simulate.hpp"
#include "reachavoid/svg.hpp"
#include "reachavoid/winning_region.hpp"
#include "support/oracles.hpp"
#include "support/random_scenarios.hpp"

using namespace reachavoid;
namespace rt = reachavoid::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(const char* id, const char* title, double budget_s, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    v.pass = false;
    v.detail += " (over time budget)";
  }
  if (!v.pass) ++failures;
  std::printf("%s %s: %s [%s] %.2fs\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<Point> members_of(const Coalition& c, const Scenario& s) {
  std::vector<Point> out;
  for (int i : c.members()) out.push_back(s.pursuers[i]);
  return out;
}

bool same_curve(const BarrierCurve& a, const BarrierCurve& b, double tol) {
  if (a.pieces.size() != b.pieces.size()) return false;
  auto close = [&](double x, double y) { return std::abs(x - y) <= tol; };
  if (!close(a.x_min, b.x_min) || !close(a.x_max, b.x_max)) return false;
  for (std::size_t i = 0; i < a.pieces.size(); ++i) {
    const CurvePiece& p = a.pieces[i];
    const CurvePiece& q = b.pieces[i];
    if (p.kind != q.kind || !close(p.x_lo, q.x_lo) || !close(p.x_hi, q.x_hi) ||
        !close(p.center_x, q.center_x) || !close(p.radius, q.radius) ||
        !close(p.generator.x, q.generator.x) || !close(p.generator.y, q.generator.y)) {
      return false;
    }
  }
  return true;
}

std::string fmt_count(const char* what, long n) { return std::string(what) + "=" + std::to_string(n); }

Verdict ac1() {
  std::mt19937_64 rng(1001);
  long compared = 0, disagree = 0;
  const int scenarios = 600;
  for (int k = 0; k < scenarios; ++k) {
    rt::RandomSpec spec;
    spec.evaders = 1;
    spec.target_side_prob = 0.15;
    const Scenario s = rt::random_scenario(rng, spec);
    const double l = s.target_length();
    for (std::uint32_t code = 1; code <= coalition_count(s.num_pursuers()); ++code) {
      const Coalition c(code);
      const BarrierCurve curve = build_barrier(c, s);
      const auto pos = members_of(c, s);
      const auto virt = virtualize(pos);
      for (int j = 0; j < 4; ++j) {
        const Point e = rt::sample_in(rng, s.domain, Side::Play);
        if (std::abs(maximize_margin(e, virt, s.alpha, l).value) <= 1e-5) continue;
        ++compared;
        if (classify(e, curve) != oracle_classify(e, pos, s.alpha, l)) ++disagree;
      }
    }
  }
  return {disagree == 0 && compared > 0, fmt_count("scenarios", scenarios) + " " +
                                             fmt_count("compared", compared) + " " +
                                             fmt_count("disagreements", disagree)};
}

Verdict ac2() {
  std::string detail;
  bool ok = true;
  auto check = [&](const char* name, double got, double want, double tol) {
    const bool good = std::abs(got - want) <= tol;
    ok = ok && good;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s=%.12g%s ", name, got, good ? "" : "!");
    detail += buf;
  };
  const BarrierCurve one = build_barrier(std::vector<Point>{{1, -2}}, std::vector<int>{0}, 0.5, 2);
  check("single.y(1)", barrier_y(one, 1.0).value_or(NAN), -1.0, 1e-9);
  const auto j = one.junctions();
  ok = ok && j.size() == 2;
  if (j.size() == 2) {
    check("single.j1", j[0], 0.25, 1e-9);
    check("single.j2", j[1], 1.75, 1e-9);
  }
  const BarrierCurve two = build_barrier(std::vector<Point>{{0.5, -1}, {1.5, -1}}, std::vector<int>{0, 1}, 0.5, 2);
  check("pair.y(1)", barrier_y(two, 1.0).value_or(NAN), -0.5590, 1e-3);
  const BarrierCurve three =
      build_barrier(std::vector<Point>{{0.3, -1}, {1.0, -1}, {1.7, -1}}, std::vector<int>{0, 1, 2}, 0.5, 2);
  bool found = false;
  for (const CurvePiece& p : three.pieces) {
    if (p.kind == PieceKind::QuadraticArc && p.pursuer == 1) {
      found = true;
      check("triple.lo", p.x_lo, 0.7375, 1e-9);
      check("triple.hi", p.x_hi, 1.2625, 1e-9);
    }
  }
  ok = ok && found;
  // Cross-check against the disk-envelope oracle.
  const auto env = rt::envelope_y(1.0, {{0.5, -1}, {1.5, -1}}, 0.5, 2);
  ok = ok && env && std::abs(*env - *barrier_y(two, 1.0)) < 1e-6;
  return {ok, detail};
}

Verdict ac3() {
  std::mt19937_64 rng(1003);
  int cases = 0, bad = 0;
  while (cases < 100) {
    rt::RandomSpec spec;
    spec.target_side_prob = 0.6;
    const Scenario s = rt::random_scenario(rng, spec);
    if (std::none_of(s.pursuers.begin(), s.pursuers.end(), [](Point p) { return p.y > 0; })) continue;
    std::vector<int> idx(s.num_pursuers());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    const BarrierCurve a = build_barrier(s.pursuers, idx, s.alpha, s.target_length());
    std::vector<Point> mirrored = s.pursuers;
    for (Point& p : mirrored) p.y = -std::abs(p.y);
    const BarrierCurve b = build_barrier(mirrored, idx, s.alpha, s.target_length());
    if (!same_curve(a, b, 1e-12)) ++bad;
    ++cases;
  }
  return {bad == 0, fmt_count("cases", cases) + " " + fmt_count("differing", bad)};
}

Verdict ac4() {
  std::mt19937_64 rng(1004);
  std::uniform_real_distribution<double> u(0, 1);
  int cases = 0, bad = 0;
  while (cases < 100) {
    rt::RandomSpec spec;
    spec.max_pursuers = 4;
    const Scenario s = rt::random_scenario(rng, spec);
    std::vector<Point> ps = s.pursuers;
    std::vector<int> idx(ps.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    const BarrierCurve base = build_barrier(ps, idx, s.alpha, s.target_length());
    // A pursuer straight below an existing one is farther from every
    // target point, so it is dominated.
    const Point anchor = ps[rng() % ps.size()];
    const Point extra{anchor.x, -std::abs(anchor.y) - 0.05 - u(rng)};
    const auto grid = rt::grid_active(std::vector<Point>{anchor, extra}, s.target_length());
    if (grid.size() != 1 || grid[0] != 0) continue;
    ps.push_back(extra);
    idx.push_back(static_cast<int>(idx.size()));
    const BarrierCurve grown = build_barrier(ps, idx, s.alpha, s.target_length());
    if (!same_curve(base, grown, 1e-12)) ++bad;
    ++cases;
  }
  return {bad == 0, fmt_count("cases", cases) + " " + fmt_count("changed", bad)};
}

Verdict ac5() {
  std::mt19937_64 rng(1005);
  int cases = 0, failed = 0;
  while (cases < 1000) {
    rt::RandomSpec spec;
    spec.min_pursuers = 3;
    spec.max_pursuers = 5;
    spec.evaders = 1;
    spec.target_side_prob = 0.15;
    const Scenario s = rt::random_scenario(rng, spec);
    const Coalition all(coalition_count(s.num_pursuers()));
    const BarrierCurve curve = build_barrier(all, s);
    Scenario probe = s;
    bool placed = false;
    for (int t = 0; t < 50 && !placed; ++t) {
      const Point e = rt::sample_in(rng, s.domain, Side::Play);
      if (classify(e, curve) != RegionLabel::PWR) continue;
      probe.evaders = {e};
      placed = true;
    }
    if (!placed) continue;
    try {
      const Coalition w = degeneration_witness(probe, all, 0);
      if (w.members().size() != 2 || classify(probe.evaders[0], w, probe) != RegionLabel::PWR) ++failed;
    } catch (const VerificationFailure&) {
      ++failed;
    }
    ++cases;
  }
  return {failed == 0, fmt_count("instances", cases) + " " + fmt_count("failures", failed)};
}

Verdict ac6() {
  std::mt19937_64 rng(1006);
  long ilps = 0, wrong = 0;
  for (std::size_t np = 1; np <= 6; ++np) {
    for (std::size_t ne = 1; ne <= 8; ++ne) {
      const std::size_t nv = num_variables(np, ne);
      if (nv > 24) continue;
      for (int t = 0; t < 40; ++t) {
        std::bernoulli_distribution bit(std::uniform_real_distribution<double>(0.05, 0.95)(rng));
        PriorInfoVector r{np, ne, std::vector<std::uint8_t>(nv)};
        for (auto& b : r.bits) b = bit(rng) ? 1 : 0;
        const IlpInstance ilp = build_ilp(r, np, ne);
        const AssignmentSolution sol = solve_ilp(ilp);
        if (sol.q != rt::brute_force_q(r.bits, np, ne) || !is_feasible(ilp, sol.z_star)) ++wrong;
        ++ilps;
      }
    }
  }
  long closures = 0, lost = 0;
  for (int t = 0; t < 300; ++t) {
    rt::RandomSpec spec;
    spec.max_pursuers = 4;
    spec.evaders = 1 + static_cast<int>(rng() % 3);
    spec.target_side_prob = 0.15;
    const Scenario s = rt::random_scenario(rng, spec);
    std::vector<std::vector<std::uint8_t>> capture;
    for (std::uint32_t code = 1; code <= coalition_count(s.num_pursuers()); ++code) {
      const BarrierCurve c = build_barrier(Coalition(code), s);
      std::vector<std::uint8_t> row;
      for (const Point& e : s.evaders) row.push_back(classify(e, c) == RegionLabel::PWR);
      capture.push_back(row);
    }
    const int q = solve_ilp(build_ilp(prior_info(s), s.num_pursuers(), s.num_evaders())).q;
    if (q != rt::brute_force_full_coalitions(capture, s.num_evaders())) ++lost;
    ++closures;
  }
  return {wrong == 0 && lost == 0, fmt_count("ilps", ilps) + " " + fmt_count("wrong", wrong) + " " +
                                       fmt_count("closure_cases", closures) + " " +
                                       fmt_count("closure_mismatch", lost)};
}

Verdict ac7() {
  long cells = 0, bad = 0;
  for (std::size_t np = 1; np <= 8; ++np) {
    for (std::size_t ne = 1; ne <= 4; ++ne) {
      const BinaryMatrix a = build_a3(np, ne);
      if (a.rows != np || a.cols != num_variables(np, ne)) {
        ++bad;
        continue;
      }
      for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t v = 0; v < a.cols; ++v) {
          const auto m = rt::block_members(v / ne, np);
          const bool in = std::find(m.begin(), m.end(), static_cast<int>(i)) != m.end();
          if (a.at(i, v) != (in ? 1 : 0)) ++bad;
          ++cells;
        }
      }
    }
  }
  return {bad == 0, fmt_count("cells", cells) + " " + fmt_count("mismatched", bad)};
}

Verdict ac8() {
  const Scenario s = parse_scenario(read_file(REACHAVOID_DATA_DIR "/scenarios/five_vs_six.json"));
  SolveOptions opt;
  opt.oracle = true;
  const SolveResult r = solve(s, opt);
  SvgLayers layers;
  layers.barriers.push_back(r.team_barrier);
  layers.grid = region_grid(Coalition(coalition_count(s.num_pursuers())), s, 80);
  layers.assignment = r.assignment;
  const std::string svg = render_svg(s, layers);
  const bool svg_ok = svg.find("<svg ") != std::string::npos && svg.find("</svg>") != std::string::npos &&
                      svg.find("<polyline") != std::string::npos;
  const auto& a = r.assignment;
  const bool ok = s.alpha == 0.7 && s.num_pursuers() == 5 && s.num_evaders() == 6 && a.q == 3 &&
                  !a.pairs_two.empty() && r.mismatches.empty() && svg_ok;
  return {ok, "q=" + std::to_string(a.q) + " one_to_one=" + std::to_string(a.pairs_one.size()) +
                  " two_to_one=" + std::to_string(a.pairs_two.size()) +
                  " oracle_mismatches=" + std::to_string(r.mismatches.size()) +
                  " svg_bytes=" + std::to_string(svg.size())};
}

double distance_to_curve(Point e, const BarrierCurve& c) {
  const int n = 20000;
  double best = 1e300;
  for (int i = 0; i <= n; ++i) {
    const double x = c.x_min + (c.x_max - c.x_min) * i / n;
    const auto y = barrier_y(c, x);
    if (y) best = std::min(best, distance(e, {x, *y}));
  }
  return best;
}

Verdict ac9() {
  std::mt19937_64 rng(1009);
  const EngagementConfig cfg;
  int sampled = 0, ewr = 0, pwr = 0, mismatch = 0, payoff_bad = 0;
  double worst = 0;
  while (sampled < 100) {
    rt::RandomSpec spec;
    spec.evaders = 1;
    spec.target_side_prob = 0.15;
    const Scenario s = rt::random_scenario(rng, spec);
    const Coalition c(
        std::uniform_int_distribution<std::uint32_t>(1, coalition_count(s.num_pursuers()))(rng));
    const BarrierCurve curve = build_barrier(c, s);
    const Point e = rt::sample_in(rng, s.domain, Side::Play);
    if (distance_to_curve(e, curve) <= 10 * cfg.capture_radius) continue;
    const RegionLabel lab = classify(e, curve);
    // Keep the two labels roughly balanced.
    if (lab == RegionLabel::EWR && ewr >= 60) continue;
    if (lab == RegionLabel::PWR && pwr >= 60) continue;
    const auto pos = members_of(c, s);
    const Outcome o = run_engagement(pos, e, s, cfg);
    ++sampled;
    if (lab == RegionLabel::EWR) {
      ++ewr;
      if (o.kind != OutcomeKind::REACHED_TARGET) {
        ++mismatch;
        continue;
      }
      const double m = rt::race_margin(o.otp_x, e, virtualize(pos), s.alpha);
      const double err = std::abs(o.payoff_j - m);
      worst = std::max(worst, err);
      if (err > cfg.capture_radius + (1 + s.alpha) * cfg.dt) ++payoff_bad;
    } else {
      ++pwr;
      if (o.kind == OutcomeKind::REACHED_TARGET && o.payoff_j > cfg.capture_radius) ++mismatch;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, " worst_payoff_err=%.3g", worst);
  return {mismatch == 0 && payoff_bad == 0,
          fmt_count("evaders", sampled) + " " + fmt_count("ewr", ewr) + " " + fmt_count("pwr", pwr) +
              " " + fmt_count("outcome_mismatch", mismatch) + " " +
              fmt_count("payoff_out_of_tol", payoff_bad) + buf};
}

Verdict ac10() {
  bool ok = true;
  int files = 0;
  for (const char* name : {"five_vs_six", "two_by_two", "pair_band", "rotated_pentagon"}) {
    const std::string text = read_file(std::string(REACHAVOID_DATA_DIR "/scenarios/") + name + ".json");
    SolveOptions opt;
    opt.oracle = true;
    const Scenario a = parse_scenario(text);
    const Scenario b = parse_scenario(text);
    ok = ok && emit_report(make_report(a, solve(a, opt), opt)) ==
                   emit_report(make_report(b, solve(b, opt), opt));
    ++files;
  }
  return {ok, fmt_count("scenarios", files) + (ok ? " byte-identical" : " differ")};
}

}  // namespace

int main() {
  run("AC1", "barrier and oracle agree on random scenarios", 60, ac1);
  run("AC2", "closed-form spot values", 0, ac2);
  run("AC3", "mirror property", 0, ac3);
  run("AC4", "dominated pursuers leave the barrier unchanged", 0, ac4);
  run("AC5", "two-pursuer degeneration witness", 0, ac5);
  run("AC6", "exact matching and execution-coalition closure", 0, ac6);
  run("AC7", "pursuer-uniqueness matrix", 0, ac7);
  run("AC8", "five pursuers versus six evaders", 5, ac8);
  run("AC9", "engagements agree with regions", 0, ac9);
  run("AC10", "deterministic reports", 0, ac10);
  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
