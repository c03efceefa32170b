#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace reachavoid {

// Absolute tolerance for on-boundary tests. All quantities are O(1) once a
// scenario is in the canonical frame.
inline constexpr double kGeoEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator*(double s) const { return {x * s, y * s}; }
  constexpr Point operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Point&) const = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Circle {
  Point center;
  double radius = 0.0;
};

// Open half-plane {z : normal . z < offset}, normal of unit length.
struct HalfPlane {
  Point normal;
  double offset = 0.0;

  bool contains(Point z) const { return dot(normal, z) < offset; }
  // Signed slack; positive inside.
  double slack(Point z) const { return offset - dot(normal, z); }
};

// Parameter interval [t_lo, t_hi] of a segment a + t (b - a), t in [0, 1].
struct SegmentInterval {
  double t_lo = 0.0;
  double t_hi = 0.0;
  Point start;
  Point end;

  double length_param() const { return t_hi - t_lo; }
};

enum class Side { Play, Target, Any };

// Convex polygon (counter-clockwise) with the target line from (0,0) to
// (target_length, 0) as a chord. The target region lies at y > 0.
class GameDomain {
 public:
  // Throws DomainError when the polygon is not convex or the chord invariants
  // fail. Clockwise input is reordered to counter-clockwise.
  GameDomain(std::vector<Point> polygon, double target_length);

  const std::vector<Point>& polygon() const { return polygon_; }
  double target_length() const { return target_length_; }

  // Inside-or-on-boundary test with kGeoEps slack.
  bool inside(Point p) const;
  bool contains(Point p, Side side) const;

  // Axis-aligned bounds of the closure of the play region (polygon clipped to
  // y <= 0).
  void play_bounds(Point& lo, Point& hi) const;

  // Polygon clipped to the closed half-plane y >= 0 (resp. y <= 0).
  std::vector<Point> target_polygon() const;
  std::vector<Point> play_polygon() const;

 private:
  std::vector<Point> polygon_;
  double target_length_;
};

// Vertex-list convexity (strict; collinear consecutive vertices allowed).
bool is_convex(std::span<const Point> polygon);
double signed_area(std::span<const Point> polygon);

// Clip a convex polygon to {z : normal . z <= offset}.
std::vector<Point> clip_polygon(std::span<const Point> polygon, Point normal, double offset);

// Apollonius circle of an evader against one pursuer at speed ratio alpha.
// The open disk is the set of points the evader reaches strictly first.
Circle apollonius(Point evader, Point pursuer, double alpha);

// Points strictly closer to pi than to pj.
HalfPlane dominance_halfplane(Point pi, Point pj);

// Portion of the segment [seg_start, seg_end] strictly inside the half-plane.
// Empty when the inside portion has zero length.
std::optional<SegmentInterval> halfplane_segment_intersect(const HalfPlane& hp, Point seg_start,
                                                           Point seg_end);

// Rigid motion (rotation or reflection plus translation) onto the canonical
// frame: target start -> origin, target end -> (l, 0), target side -> y > 0.
class FrameTransform {
 public:
  FrameTransform() = default;
  FrameTransform(Point origin, Point x_axis, Point y_axis)
      : origin_(origin), x_axis_(x_axis), y_axis_(y_axis) {}

  Point apply(Point p) const {
    const Point d = p - origin_;
    return {dot(x_axis_, d), dot(y_axis_, d)};
  }
  Point inverse(Point q) const { return origin_ + x_axis_ * q.x + y_axis_ * q.y; }

  double determinant() const { return cross(x_axis_, y_axis_); }
  bool is_identity() const {
    return origin_ == Point{0, 0} && x_axis_ == Point{1, 0} && y_axis_ == Point{0, 1};
  }
  Point origin() const { return origin_; }
  Point x_axis() const { return x_axis_; }
  Point y_axis() const { return y_axis_; }

 private:
  Point origin_{0, 0};
  Point x_axis_{1, 0};
  Point y_axis_{0, 1};
};

struct NormalizedFrame {
  FrameTransform transform;
  double target_length = 0.0;
  std::vector<Point> polygon;
  std::vector<Point> players;
};

NormalizedFrame normalize_frame(Point target_start, Point target_end,
                                std::span<const Point> polygon, std::span<const Point> players,
                                Point target_side_hint);

}  // namespace reachavoid
