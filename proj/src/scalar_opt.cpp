#include "reachavoid/scalar_opt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "reachavoid/errors.hpp"

namespace reachavoid {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw DomainError("speed ratio must lie in (0, 1)");
}

// Samples per piece used to bracket local maxima before golden-section
// refinement. g1 has at most three stationary points on a line.
constexpr int kScanSamples = 64;

template <class F>
double golden_section_max(F&& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double g1(double xp, Point evader, Point pursuer, double alpha) {
  const Point p{xp, 0.0};
  return distance(p, pursuer) - distance(p, evader) / alpha;
}

double g1_derivative(double xp, Point evader, Point pursuer, double alpha) {
  const Point p{xp, 0.0};
  const double dp = distance(p, pursuer);
  const double de = distance(p, evader);
  const double tp = dp > 0 ? (xp - pursuer.x) / dp : 0.0;
  const double te = de > 0 ? (xp - evader.x) / de : 0.0;
  return tp - te / alpha;
}

double g1_second_derivative(double xp, Point evader, Point pursuer, double alpha) {
  const Point p{xp, 0.0};
  const double dp = distance(p, pursuer);
  const double de = distance(p, evader);
  const double sp = dp > 0 ? pursuer.y * pursuer.y / (dp * dp * dp) : 0.0;
  const double se = de > 0 ? evader.y * evader.y / (de * de * de) : 0.0;
  return sp - se / alpha;
}

double coalition_margin(double xp, Point evader, std::span<const Point> pursuers, double alpha) {
  if (pursuers.empty()) throw DomainError("coalition margin of an empty pursuer list");
  double best = std::numeric_limits<double>::infinity();
  for (const Point& p : pursuers) best = std::min(best, g1(xp, evader, p, alpha));
  return best;
}

std::vector<double> margin_breakpoints(std::span<const Point> pursuers, double l) {
  std::vector<double> out;
  for (std::size_t i = 0; i < pursuers.size(); ++i) {
    for (std::size_t j = i + 1; j < pursuers.size(); ++j) {
      const Point a = pursuers[i];
      const Point b = pursuers[j];
      if (a.x == b.x) continue;
      const double xc = (dot(b, b) - dot(a, a)) / (2.0 * (b.x - a.x));
      if (!(xc > 0 && xc < l)) continue;
      // Keep it only where these two are jointly closest.
      const Point p{xc, 0.0};
      const double dij = distance(p, a);
      bool closest = true;
      for (const Point& other : pursuers) {
        if (distance(p, other) < dij - 1e-12 * (1.0 + dij)) {
          closest = false;
          break;
        }
      }
      if (closest) out.push_back(xc);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double u, double v) { return std::abs(u - v) <= 1e-15; }),
            out.end());
  return out;
}

MarginMax maximize_margin(Point evader, std::span<const Point> pursuers, double alpha, double l,
                          double tol_x) {
  check_alpha(alpha);
  if (pursuers.empty()) throw DomainError("margin maximization needs at least one pursuer");
  if (!(tol_x > 0)) throw DomainError("tol_x must be positive");
  if (!(l > 0)) throw DomainError("target length must be positive");
  if (!(evader.y < 0)) throw DomainError("evader must lie strictly below the target line");

  std::vector<double> cuts{0.0};
  for (double b : margin_breakpoints(pursuers, l)) cuts.push_back(b);
  cuts.push_back(l);

  MarginMax best{0.0, -std::numeric_limits<double>::infinity()};
  auto consider = [&](double x) {
    const double v = coalition_margin(x, evader, pursuers, alpha);
    if (v > best.value) best = {x, v};
  };

  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k];
    const double b = cuts[k + 1];
    consider(a);
    consider(b);
    if (!(b > a)) continue;

    // Closest pursuer is constant on the open piece.
    const Point mid{0.5 * (a + b), 0.0};
    const Point* active = &pursuers[0];
    for (const Point& p : pursuers) {
      if (distance(mid, p) < distance(mid, *active)) active = &p;
    }
    auto f = [&](double x) { return g1(x, evader, *active, alpha); };
    auto df = [&](double x) { return g1_derivative(x, evader, *active, alpha); };

    std::array<double, kScanSamples + 1> xs{};
    std::array<double, kScanSamples + 1> fs{};
    std::array<double, kScanSamples + 1> ds{};
    for (int i = 0; i <= kScanSamples; ++i) {
      xs[i] = a + (b - a) * i / kScanSamples;
      fs[i] = f(xs[i]);
      ds[i] = df(xs[i]);
    }
    for (int i = 0; i < kScanSamples; ++i) {
      // Slope turning from up to down brackets a stationary maximum.
      if (ds[i] > 0 && ds[i + 1] <= 0) {
        double lo = xs[i], hi = xs[i + 1];
        while (hi - lo > tol_x * 1e-3) {
          const double m = 0.5 * (lo + hi);
          if (m <= lo || m >= hi) break;
          (df(m) > 0 ? lo : hi) = m;
        }
        consider(lo);
        consider(hi);
      }
    }
    // Value-based brackets as a backstop where the slope sampling is fooled.
    for (int i = 1; i < kScanSamples; ++i) {
      if (fs[i] >= fs[i - 1] && fs[i] >= fs[i + 1]) {
        consider(golden_section_max(f, xs[i - 1], xs[i + 1], tol_x));
      }
    }
  }
  return best;
}

std::optional<std::pair<double, double>> apollonius_chord(Point evader, Point pursuer,
                                                          double alpha) {
  const Circle c = apollonius(evader, pursuer, alpha);
  const double h2 = c.radius * c.radius - c.center.y * c.center.y;
  if (h2 < 0) return std::nullopt;
  const double h = std::sqrt(h2);
  return std::pair{c.center.x - h, c.center.x + h};
}

double solve_quartic_otp(Point evader, Point pursuer, double alpha, double c1, double c2) {
  check_alpha(alpha);
  if (!(c1 <= c2)) throw DomainError("chord interval is inverted");
  constexpr double kChordTol = 1e-6;
  if (std::abs(g1(c1, evader, pursuer, alpha)) > kChordTol ||
      std::abs(g1(c2, evader, pursuer, alpha)) > kChordTol) {
    throw DomainError("interval is not the Apollonius chord: g1 does not vanish at its ends");
  }
  auto df = [&](double x) { return g1_derivative(x, evader, pursuer, alpha); };
  if (df(c1) <= 0) return c1;
  if (df(c2) >= 0) return c2;

  double lo = c1;
  double hi = c2;
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = df(x);
    if (std::abs(f) <= 1e-14) break;
    if (f > 0) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(x))) break;
    const double h = g1_second_derivative(x, evader, pursuer, alpha);
    double next = (h < 0) ? x - f / h : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return x;
}

}  // namespace reachavoid
