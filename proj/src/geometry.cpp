#include "reachavoid/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "reachavoid/errors.hpp"

namespace reachavoid {

double signed_area(std::span<const Point> polygon) {
  double twice = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    twice += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
  }
  return 0.5 * twice;
}

bool is_convex(std::span<const Point> polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  int sign = 0;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point e1 = polygon[(i + 1) % n] - polygon[i];
    const Point e2 = polygon[(i + 2) % n] - polygon[(i + 1) % n];
    if (norm(e1) <= kGeoEps || norm(e2) <= kGeoEps) return false;
    const double c = cross(e1, e2) / (norm(e1) * norm(e2));
    if (std::abs(c) > 1e-12) {
      const int s = c > 0 ? 1 : -1;
      if (sign != 0 && s != sign) return false;
      sign = s;
    } else if (dot(e1, e2) < 0) {
      return false;  // edge folds back on itself
    }
    turning += std::atan2(cross(e1, e2), dot(e1, e2));
  }
  // A star-shaped vertex list can keep one turning direction while winding
  // more than once.
  return sign != 0 && std::abs(std::abs(turning) - 2.0 * std::numbers::pi) < 1e-6;
}

std::vector<Point> clip_polygon(std::span<const Point> polygon, Point normal, double offset) {
  std::vector<Point> out;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = polygon[i];
    const Point b = polygon[(i + 1) % n];
    const double sa = offset - dot(normal, a);
    const double sb = offset - dot(normal, b);
    if (sa >= 0) out.push_back(a);
    if ((sa >= 0) != (sb >= 0)) {
      const double t = sa / (sa - sb);
      out.push_back(a + (b - a) * t);
    }
  }
  return out;
}

namespace {

// Signed distance from p to the line through edge (a, b); positive on the
// left, which is the interior for a counter-clockwise polygon.
double edge_distance(Point a, Point b, Point p) { return cross(b - a, p - a) / distance(a, b); }

double min_edge_distance(const std::vector<Point>& poly, Point p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    best = std::min(best, edge_distance(poly[i], poly[(i + 1) % poly.size()], p));
  }
  return best;
}

}  // namespace

GameDomain::GameDomain(std::vector<Point> polygon, double target_length)
    : polygon_(std::move(polygon)), target_length_(target_length) {
  for (const Point& v : polygon_) {
    if (!is_finite(v)) throw DomainError("domain vertex is not finite");
  }
  if (!std::isfinite(target_length_) || target_length_ <= 0) {
    throw DomainError("target length must be positive");
  }
  if (!is_convex(polygon_)) throw DomainError("domain polygon is not convex");
  if (signed_area(polygon_) < 0) std::reverse(polygon_.begin(), polygon_.end());

  const Point m{0, 0};
  const Point n{target_length_, 0};
  for (const Point& end : {m, n}) {
    if (std::abs(min_edge_distance(polygon_, end)) > kGeoEps) {
      throw DomainError("target line endpoint is not on the domain boundary");
    }
  }
  if (min_edge_distance(polygon_, (m + n) * 0.5) <= kGeoEps) {
    throw DomainError("target line is not a chord through the domain interior");
  }
  const bool above = std::any_of(polygon_.begin(), polygon_.end(),
                                 [](Point v) { return v.y > kGeoEps; });
  const bool below = std::any_of(polygon_.begin(), polygon_.end(),
                                 [](Point v) { return v.y < -kGeoEps; });
  if (!above || !below) {
    throw DomainError("domain must extend to both sides of the target line");
  }
}

bool GameDomain::inside(Point p) const { return min_edge_distance(polygon_, p) >= -kGeoEps; }

bool GameDomain::contains(Point p, Side side) const {
  if (!inside(p)) return false;
  switch (side) {
    case Side::Play:
      return p.y < 0;
    case Side::Target:
      return p.y >= 0;
    case Side::Any:
      return true;
  }
  return false;
}

std::vector<Point> GameDomain::target_polygon() const {
  return clip_polygon(polygon_, {0, -1}, 0.0);
}

std::vector<Point> GameDomain::play_polygon() const { return clip_polygon(polygon_, {0, 1}, 0.0); }

void GameDomain::play_bounds(Point& lo, Point& hi) const {
  const auto play = play_polygon();
  lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  hi = {-lo.x, -lo.y};
  for (const Point& v : play) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
}

Circle apollonius(Point evader, Point pursuer, double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw DomainError("speed ratio must lie in (0, 1)");
  if (evader == pursuer) throw DomainError("evader and pursuer coincide");
  const double k = 1.0 - alpha * alpha;
  return {(evader - pursuer * (alpha * alpha)) / k, alpha * distance(evader, pursuer) / k};
}

HalfPlane dominance_halfplane(Point pi, Point pj) {
  const Point d = pj - pi;
  const double len = norm(d);
  if (len == 0.0) throw DomainError("dominance half-plane of coincident points");
  const Point normal = d / len;
  return {normal, dot(normal, (pi + pj) * 0.5)};
}

std::optional<SegmentInterval> halfplane_segment_intersect(const HalfPlane& hp, Point seg_start,
                                                           Point seg_end) {
  if (seg_start == seg_end) throw DomainError("degenerate segment");
  // slack(t) = s0 + t (s1 - s0); inside where slack > 0.
  const double s0 = hp.slack(seg_start);
  const double s1 = hp.slack(seg_end);
  double lo = 0.0;
  double hi = 1.0;
  if (s0 == s1) {
    if (s0 <= 0) return std::nullopt;
  } else {
    const double t_zero = s0 / (s0 - s1);
    if (s1 > s0) {
      lo = std::max(lo, t_zero);
    } else {
      hi = std::min(hi, t_zero);
    }
  }
  if (!(hi > lo)) return std::nullopt;
  const Point dir = seg_end - seg_start;
  return SegmentInterval{lo, hi, seg_start + dir * lo, seg_start + dir * hi};
}

NormalizedFrame normalize_frame(Point target_start, Point target_end,
                                std::span<const Point> polygon, std::span<const Point> players,
                                Point target_side_hint) {
  const Point d = target_end - target_start;
  const double l = norm(d);
  if (!(l > kGeoEps)) throw DomainError("degenerate target segment");
  const Point x_axis = d / l;
  Point y_axis{-x_axis.y, x_axis.x};
  const double hint_side = dot(y_axis, target_side_hint - target_start);
  if (std::abs(hint_side) <= kGeoEps) {
    throw DomainError("target side hint lies on the target line");
  }
  if (hint_side < 0) y_axis = y_axis * -1.0;

  NormalizedFrame out;
  out.transform = FrameTransform(target_start, x_axis, y_axis);
  out.target_length = l;
  out.polygon.reserve(polygon.size());
  for (const Point& v : polygon) out.polygon.push_back(out.transform.apply(v));
  out.players.reserve(players.size());
  for (const Point& p : players) out.players.push_back(out.transform.apply(p));
  return out;
}

}  // namespace reachavoid
