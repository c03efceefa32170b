#pragma once

// Brute-force reference computations. None of these call into the library
// code they are used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "reachavoid/geometry.hpp"

namespace reachavoid::testing {

inline double nearest_distance(Point p, const std::vector<Point>& pursuers) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& q : pursuers) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
  return best;
}

// Race margin at (x, 0) computed from scratch.
inline double race_margin(double x, Point e, const std::vector<Point>& pursuers, double alpha) {
  const Point p{x, 0.0};
  return nearest_distance(p, pursuers) - std::hypot(p.x - e.x, p.y - e.y) / alpha;
}

// Best margin over a uniform grid of the target line plus a local
// refinement around every grid maximum.
inline double dense_max_margin(Point e, const std::vector<Point>& pursuers, double alpha, double l,
                               int n = 20000) {
  std::vector<double> f(n + 1);
  for (int i = 0; i <= n; ++i) f[i] = race_margin(l * i / n, e, pursuers, alpha);
  double best = *std::max_element(f.begin(), f.end());
  for (int i = 1; i < n; ++i) {
    if (f[i] < f[i - 1] || f[i] < f[i + 1]) continue;
    double a = l * (i - 1) / n;
    double b = l * (i + 1) / n;
    for (int it = 0; it < 80; ++it) {
      const double m1 = a + (b - a) / 3;
      const double m2 = b - (b - a) / 3;
      if (race_margin(m1, e, pursuers, alpha) < race_margin(m2, e, pursuers, alpha)) {
        a = m1;
      } else {
        b = m2;
      }
    }
    best = std::max(best, race_margin(0.5 * (a + b), e, pursuers, alpha));
  }
  return best;
}

// Lower envelope of the union of disks centred at target points p with
// radius alpha times the distance from p to the nearest pursuer: the set of
// evader positions that win some race. Empty where no disk reaches x.
inline std::optional<double> envelope_y(double x, const std::vector<Point>& pursuers, double alpha,
                                        double l, int n = 20000) {
  auto h = [&](double p) {
    const double d = nearest_distance({p, 0.0}, pursuers);
    return alpha * alpha * d * d - (x - p) * (x - p);
  };
  std::vector<double> f(n + 1);
  for (int i = 0; i <= n; ++i) f[i] = h(l * i / n);
  int arg = static_cast<int>(std::max_element(f.begin(), f.end()) - f.begin());
  double a = l * std::max(arg - 1, 0) / n;
  double b = l * std::min(arg + 1, n) / n;
  for (int it = 0; it < 100; ++it) {
    const double m1 = a + (b - a) / 3;
    const double m2 = b - (b - a) / 3;
    if (h(m1) < h(m2)) {
      a = m1;
    } else {
      b = m2;
    }
  }
  const double best = std::max({f[arg], h(0.5 * (a + b))});
  if (best < 0) return std::nullopt;
  return -std::sqrt(best);
}

// Pursuers strictly closest to some sample of the target line.
inline std::vector<int> grid_active(const std::vector<Point>& pursuers, double l, int n = 10000) {
  std::vector<int> hit(pursuers.size(), 0);
  for (int i = 0; i <= n; ++i) {
    const Point p{l * i / n, 0.0};
    int who = -1;
    double best = std::numeric_limits<double>::infinity();
    double second = best;
    for (std::size_t k = 0; k < pursuers.size(); ++k) {
      const double d = std::hypot(p.x - pursuers[k].x, p.y - pursuers[k].y);
      if (d < best) {
        second = best;
        best = d;
        who = static_cast<int>(k);
      } else if (d < second) {
        second = d;
      }
    }
    if (best < second) hit[who] = 1;
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < pursuers.size(); ++k) {
    if (hit[k]) out.push_back(static_cast<int>(k));
  }
  return out;
}

// Members of the b-th execution coalition, enumerated directly.
inline std::vector<int> block_members(std::size_t b, std::size_t np) {
  if (b < np) return {static_cast<int>(b)};
  std::size_t k = np;
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = i + 1; j < np; ++j) {
      if (k++ == b) return {static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return {};
}

// Largest matching by exhaustive enumeration of every binary vector whose
// support lies inside the prior support. Feasibility is checked from the
// coalition membership of each variable, independent of any constraint
// matrix.
inline int brute_force_q(const std::vector<std::uint8_t>& prior, std::size_t np, std::size_t ne) {
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < prior.size(); ++v) {
    if (prior[v]) support.push_back(v);
  }
  std::vector<std::uint32_t> pmask(support.size());
  std::vector<std::uint32_t> emask(support.size());
  for (std::size_t s = 0; s < support.size(); ++s) {
    for (int m : block_members(support[s] / ne, np)) pmask[s] |= 1u << m;
    emask[s] = 1u << (support[s] % ne);
  }
  int best = 0;
  const std::uint64_t total = 1ull << support.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::uint32_t pu = 0;
    std::uint32_t eu = 0;
    bool ok = true;
    int count = 0;
    for (std::size_t s = 0; s < support.size() && ok; ++s) {
      if (!((mask >> s) & 1u)) continue;
      if ((pu & pmask[s]) || (eu & emask[s])) ok = false;
      pu |= pmask[s];
      eu |= emask[s];
      ++count;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

// Maximum matching when every coalition (not only one or two pursuers) may
// be used. capture[c][j] is 1 when coalition code c+1 captures evader j.
inline int brute_force_full_coalitions(const std::vector<std::vector<std::uint8_t>>& capture,
                                       std::size_t ne) {
  int best = 0;
  auto rec = [&](auto&& self, std::size_t j, std::uint32_t used, int q) -> void {
    if (j == ne) {
      best = std::max(best, q);
      return;
    }
    if (q + static_cast<int>(ne - j) <= best) return;
    self(self, j + 1, used, q);
    for (std::size_t c = 0; c < capture.size(); ++c) {
      const std::uint32_t code = static_cast<std::uint32_t>(c + 1);
      if ((code & used) || !capture[c][j]) continue;
      self(self, j + 1, used | code, q + 1);
    }
  };
  rec(rec, 0, 0u, 0);
  return best;
}

}  // namespace reachavoid::testing
