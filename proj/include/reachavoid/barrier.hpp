#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reachavoid/geometry.hpp"
#include "reachavoid/scenario.hpp"

namespace reachavoid {

// Subset of pursuers. Bit i (from the low end) set means pursuer i belongs.
class Coalition {
 public:
  static constexpr std::size_t kMaxPursuers = 30;

  explicit Coalition(std::uint32_t code);
  static Coalition from_members(std::span<const int> members);
  static Coalition from_members(std::initializer_list<int> members) {
    return from_members(std::span<const int>(members.begin(), members.size()));
  }

  std::uint32_t code() const { return code_; }
  // Zero-based pursuer indices in increasing order.
  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(int pursuer) const { return (code_ >> pursuer) & 1u; }
  bool is_subcoalition_of(const Coalition& other) const {
    return (code_ & other.code_) == code_;
  }
  bool operator==(const Coalition& o) const { return code_ == o.code_; }

 private:
  std::uint32_t code_;
  std::vector<int> members_;
};

// Number of coalitions over n pursuers, 2^n - 1.
std::uint32_t coalition_count(std::size_t num_pursuers);

enum class PieceKind {
  EndpointArc,   // arc of a circle centred at an end of the target line
  QuadraticArc,  // evader positions whose straight race ties with one pursuer
  CrossoverArc,  // arc of a circle centred where two pursuers tie on the line
};

const char* to_string(PieceKind kind);

struct CurvePiece {
  PieceKind kind = PieceKind::QuadraticArc;
  double x_lo = 0.0;
  double x_hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;
  // Arcs: centre (center_x, 0) and radius.
  double center_x = 0.0;
  double radius = 0.0;
  // Quadratic arcs: generating pursuer position (after virtualization).
  Point generator;
  // Pursuer indices the piece depends on; second is -1 unless the piece is a
  // crossover arc.
  int pursuer = -1;
  int second_pursuer = -1;
  double alpha = 0.5;

  // Closed-form y on the piece (the lower branch, y <= 0). Inputs outside
  // [x_lo, x_hi] are evaluated on the analytic continuation.
  double y(double x) const;
};

// The unclipped barrier: x-ordered, abutting pieces. Clipping to the play
// region happens at query time.
struct BarrierCurve {
  std::vector<CurvePiece> pieces;
  double x_min = 0.0;
  double x_max = 0.0;
  Coalition generating{1};

  std::vector<double> junctions() const;
};

// Abscissa on y = 0 equidistant from h1 and h2.
double crossover_x(Point h1, Point h2);

enum class BaseCurve {
  LeftEndpoint,       // circle about (0,0), x <= alpha^2 x1
  SingleQuadratic,    // one pursuer, x in (k1, k2)
  RightEndpoint,      // circle about (l,0), x >= (1-alpha^2) l + alpha^2 x1
  LeftQuadratic,      // first of two pursuers, up to the crossover
  Crossover,          // arc about the crossover point of two pursuers
  RightQuadratic,     // second of two pursuers, from the crossover
  InteriorQuadratic,  // middle of three pursuers, between both crossovers
};

// One closed-form curve piece. `generators` holds one, two or three pursuer
// positions (y <= 0) depending on the curve; the first element drives the
// endpoint curves, except RightEndpoint which uses the last. Returns empty
// when the x-interval is empty.
std::optional<CurvePiece> base_curve(BaseCurve which, std::span<const Point> generators,
                                     double alpha, double l);

// Indices of the pursuers that are strictly first to some point of the
// target line [0, l]. This is the unique largest full-active subcoalition.
std::vector<int> largest_full_active(std::span<const Point> positions, double l);

// Reflect pursuers in the target region across the target line.
std::vector<Point> virtualize(std::span<const Point> positions);

// Barrier for the given pursuers (indices map into `positions`).
BarrierCurve build_barrier(std::span<const Point> positions, std::span<const int> indices,
                           double alpha, double l);
BarrierCurve build_barrier(const Coalition& coalition, const Scenario& scenario);

// y of the barrier at x, empty outside [x_min, x_max].
std::optional<double> barrier_y(const BarrierCurve& curve, double x);

// Largest gap between adjacent pieces at their shared junctions.
double max_junction_gap(const BarrierCurve& curve);

}  // namespace reachavoid
