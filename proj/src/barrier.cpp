#include "reachavoid/barrier.hpp"

#include <algorithm>
#include <cmath>

#include "reachavoid/errors.hpp"

namespace reachavoid {

Coalition::Coalition(std::uint32_t code) : code_(code) {
  if (code == 0) throw DomainError("coalition must have at least one member");
  if (code >> kMaxPursuers) throw DomainError("coalition code exceeds the supported pursuer count");
  for (int i = 0; i < static_cast<int>(kMaxPursuers); ++i) {
    if ((code >> i) & 1u) members_.push_back(i);
  }
}

Coalition Coalition::from_members(std::span<const int> members) {
  std::uint32_t code = 0;
  for (int m : members) {
    if (m < 0 || m >= static_cast<int>(kMaxPursuers)) throw DomainError("pursuer index out of range");
    code |= 1u << m;
  }
  return Coalition(code);
}

std::uint32_t coalition_count(std::size_t num_pursuers) {
  if (num_pursuers == 0 || num_pursuers > Coalition::kMaxPursuers) {
    throw DomainError("unsupported pursuer count");
  }
  return (1u << num_pursuers) - 1u;
}

const char* to_string(PieceKind kind) {
  switch (kind) {
    case PieceKind::EndpointArc:
      return "endpoint_arc";
    case PieceKind::QuadraticArc:
      return "quadratic_arc";
    case PieceKind::CrossoverArc:
      return "crossover_arc";
  }
  return "?";
}

double CurvePiece::y(double x) const {
  double y2 = 0.0;
  if (kind == PieceKind::QuadraticArc) {
    const double a2 = alpha * alpha;
    const double dx = x - generator.x;
    y2 = (dx * dx + (1.0 - a2) * generator.y * generator.y) / (1.0 / a2 - 1.0);
  } else {
    const double dx = x - center_x;
    y2 = radius * radius - dx * dx;
  }
  return -std::sqrt(std::max(0.0, y2));
}

std::vector<double> BarrierCurve::junctions() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) out.push_back(pieces[i].x_hi);
  return out;
}

double crossover_x(Point h1, Point h2) {
  if (h1.x == h2.x) throw DomainError("crossover of pursuers with equal abscissa");
  return (dot(h2, h2) - dot(h1, h1)) / (2.0 * (h2.x - h1.x));
}

namespace {

CurvePiece arc(PieceKind kind, double cx, double r, double lo, double hi, double alpha) {
  CurvePiece p;
  p.kind = kind;
  p.center_x = cx;
  p.radius = r;
  p.x_lo = lo;
  p.x_hi = hi;
  p.alpha = alpha;
  return p;
}

CurvePiece quadratic(Point h, double lo, double hi, double alpha) {
  CurvePiece p;
  p.kind = PieceKind::QuadraticArc;
  p.generator = h;
  p.x_lo = lo;
  p.x_hi = hi;
  p.lo_closed = false;
  p.hi_closed = false;
  p.alpha = alpha;
  return p;
}

std::optional<CurvePiece> nonempty(CurvePiece p) {
  if (p.x_lo > p.x_hi) return std::nullopt;
  if (p.x_lo == p.x_hi && !(p.lo_closed && p.hi_closed)) return std::nullopt;
  return p;
}

}  // namespace

std::optional<CurvePiece> base_curve(BaseCurve which, std::span<const Point> generators,
                                     double alpha, double l) {
  if (!(alpha > 0 && alpha < 1)) throw DomainError("speed ratio must lie in (0, 1)");
  if (!(l > 0)) throw DomainError("target length must be positive");
  std::size_t need = 1;
  if (which == BaseCurve::LeftQuadratic || which == BaseCurve::Crossover ||
      which == BaseCurve::RightQuadratic) {
    need = 2;
  } else if (which == BaseCurve::InteriorQuadratic) {
    need = 3;
  }
  if (generators.size() < need) throw DomainError("too few generating pursuers for base curve");
  for (const Point& h : generators) {
    if (h.y > 0) throw DomainError("base curves need pursuers at y <= 0");
  }
  const double a2 = alpha * alpha;
  const double b2 = 1.0 - a2;
  const Point h1 = generators[0];

  switch (which) {
    case BaseCurve::LeftEndpoint: {
      const double r = alpha * norm(h1);
      CurvePiece p = arc(PieceKind::EndpointArc, 0.0, r, -r, a2 * h1.x, alpha);
      return nonempty(p);
    }
    case BaseCurve::SingleQuadratic:
      return nonempty(quadratic(h1, a2 * h1.x, b2 * l + a2 * h1.x, alpha));
    case BaseCurve::RightEndpoint: {
      const Point hn = generators.back();
      const double r = alpha * distance(hn, Point{l, 0.0});
      return nonempty(arc(PieceKind::EndpointArc, l, r, b2 * l + a2 * hn.x, l + r, alpha));
    }
    case BaseCurve::LeftQuadratic: {
      const double xc = crossover_x(h1, generators[1]);
      return nonempty(quadratic(h1, a2 * h1.x, b2 * xc + a2 * h1.x, alpha));
    }
    case BaseCurve::Crossover: {
      const Point h2 = generators[1];
      const double xc = crossover_x(h1, h2);
      const double r = alpha * distance(h1, Point{xc, 0.0});
      return nonempty(
          arc(PieceKind::CrossoverArc, xc, r, b2 * xc + a2 * h1.x, b2 * xc + a2 * h2.x, alpha));
    }
    case BaseCurve::RightQuadratic: {
      const Point h2 = generators[1];
      const double xc = crossover_x(h1, h2);
      return nonempty(quadratic(h2, b2 * xc + a2 * h2.x, b2 * l + a2 * h2.x, alpha));
    }
    case BaseCurve::InteriorQuadratic: {
      const Point h2 = generators[1];
      const Point h3 = generators[2];
      if (!(h1.x < h2.x && h2.x < h3.x)) {
        throw DomainError("interior quadratic needs strictly increasing abscissae");
      }
      const double xc1 = crossover_x(h1, h2);
      const double xc2 = crossover_x(h2, h3);
      return nonempty(quadratic(h2, b2 * xc1 + a2 * h2.x, b2 * xc2 + a2 * h2.x, alpha));
    }
  }
  return std::nullopt;
}

std::vector<int> largest_full_active(std::span<const Point> positions, double l) {
  if (positions.empty()) throw DomainError("no pursuers to reduce");
  if (!(l > 0)) throw DomainError("target length must be positive");
  std::vector<int> out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    Point a{0.0, 0.0};
    Point b{l, 0.0};
    bool active = true;
    for (std::size_t j = 0; j < positions.size() && active; ++j) {
      if (j == i) continue;
      if (distance(positions[i], positions[j]) <= kGeoEps) {
        throw DomainError("pursuer positions coincide");
      }
      const auto part = halfplane_segment_intersect(dominance_halfplane(positions[i], positions[j]), a, b);
      if (!part || distance(part->start, part->end) <= kGeoEps) {
        active = false;
      } else {
        a = part->start;
        b = part->end;
      }
    }
    if (active) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<Point> virtualize(std::span<const Point> positions) {
  std::vector<Point> out(positions.begin(), positions.end());
  for (Point& p : out) {
    if (p.y > 0) p.y = -p.y;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (distance(out[i], out[j]) <= kGeoEps) {
        throw DomainError("virtual pursuer coincides with another pursuer");
      }
    }
  }
  return out;
}

BarrierCurve build_barrier(std::span<const Point> positions, std::span<const int> indices,
                           double alpha, double l) {
  if (indices.empty()) throw DomainError("empty coalition");
  std::vector<Point> members;
  members.reserve(indices.size());
  for (int idx : indices) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= positions.size()) {
      throw DomainError("coalition member out of range");
    }
    members.push_back(positions[idx]);
  }
  const std::vector<Point> virt = virtualize(members);

  std::vector<int> active = largest_full_active(virt, l);
  if (active.empty()) throw InvariantBreach("reduction left no active pursuer");
  std::sort(active.begin(), active.end(), [&](int u, int v) { return virt[u].x < virt[v].x; });

  std::vector<Point> h;
  std::vector<int> owner;
  for (int a : active) {
    h.push_back(virt[a]);
    owner.push_back(indices[a]);
  }

  BarrierCurve curve;
  curve.generating = Coalition::from_members(owner);
  auto push = [&](BaseCurve which, std::span<const Point> gens, int p1, int p2 = -1) {
    auto piece = base_curve(which, gens, alpha, l);
    if (!piece) throw InvariantBreach("full-active coalition produced an empty barrier piece");
    piece->pursuer = p1;
    piece->second_pursuer = p2;
    curve.pieces.push_back(*piece);
  };

  const std::size_t n = h.size();
  const std::span<const Point> hs(h);
  if (n == 1) {
    push(BaseCurve::LeftEndpoint, hs, owner[0]);
    push(BaseCurve::SingleQuadratic, hs, owner[0]);
    push(BaseCurve::RightEndpoint, hs, owner[0]);
  } else {
    push(BaseCurve::LeftEndpoint, hs.subspan(0, 1), owner[0]);
    push(BaseCurve::LeftQuadratic, hs.subspan(0, 2), owner[0]);
    push(BaseCurve::Crossover, hs.subspan(0, 2), owner[0], owner[1]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      push(BaseCurve::InteriorQuadratic, hs.subspan(i - 1, 3), owner[i]);
      push(BaseCurve::Crossover, hs.subspan(i, 2), owner[i], owner[i + 1]);
    }
    push(BaseCurve::RightQuadratic, hs.subspan(n - 2, 2), owner[n - 1]);
    push(BaseCurve::RightEndpoint, hs.subspan(n - 1, 1), owner[n - 1]);
  }
  curve.x_min = curve.pieces.front().x_lo;
  curve.x_max = curve.pieces.back().x_hi;
  return curve;
}

BarrierCurve build_barrier(const Coalition& coalition, const Scenario& scenario) {
  for (int m : coalition.members()) {
    if (static_cast<std::size_t>(m) >= scenario.num_pursuers()) {
      throw DomainError("coalition refers to a pursuer that does not exist");
    }
  }
  return build_barrier(scenario.pursuers, coalition.members(), scenario.alpha,
                       scenario.target_length());
}

std::optional<double> barrier_y(const BarrierCurve& curve, double x) {
  if (curve.pieces.empty() || !(x >= curve.x_min && x <= curve.x_max)) return std::nullopt;
  auto it = std::lower_bound(curve.pieces.begin(), curve.pieces.end(), x,
                             [](const CurvePiece& p, double v) { return p.x_hi < v; });
  if (it == curve.pieces.end()) it = std::prev(curve.pieces.end());
  return it->y(x);
}

double max_junction_gap(const BarrierCurve& curve) {
  double gap = 0.0;
  for (std::size_t i = 0; i + 1 < curve.pieces.size(); ++i) {
    const CurvePiece& a = curve.pieces[i];
    const CurvePiece& b = curve.pieces[i + 1];
    gap = std::max(gap, std::abs(a.x_hi - b.x_lo));
    gap = std::max(gap, std::abs(a.y(a.x_hi) - b.y(b.x_lo)));
  }
  return gap;
}

}  // namespace reachavoid
