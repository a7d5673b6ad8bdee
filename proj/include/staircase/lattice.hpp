#ifndef STAIRCASE_LATTICE_HPP
#define STAIRCASE_LATTICE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "staircase/checked.hpp"
#include "staircase/errors.hpp"
#include "staircase/rational.hpp"

namespace staircase {

/// Exponent vector in Z^2: the log of a Laurent monomial x^x_ * y^y_.
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(LatticePoint a, LatticePoint b) {
  return {checked_add(a.x, b.x), checked_add(a.y, b.y)};
}

inline LatticePoint operator-(LatticePoint a, LatticePoint b) {
  return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)};
}

/// Componentwise partial order: does p lie in q + N^2?
inline bool dominates(LatticePoint p, LatticePoint q) { return p.x >= q.x && p.y >= q.y; }

/// Sign of the cross product (b - a) x (c - a): +1 for a left turn,
/// -1 for a right turn, 0 for collinear. Exact for all int64 inputs.
int orientation(LatticePoint a, LatticePoint b, LatticePoint c);

/// Direction (run, -drop) of a boundary edge, with gcd(run, drop) = 1.
/// The outward normal of the supporting line is (-drop, -run).
struct PrimitiveStep {
  std::int64_t run = 1;
  std::int64_t drop = 1;

  friend bool operator==(const PrimitiveStep&, const PrimitiveStep&) = default;
};

/// Positive rational run/drop in lowest terms, ordered by exact value.
/// Indexes the simple ideal whose single boundary edge has this step.
struct Slope {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Slope reduced(std::int64_t num, std::int64_t den);

  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline Slope slope_of(PrimitiveStep s) { return Slope{s.run, s.drop}; }

/// Factor an integer displacement (dx, -dy), dx, dy >= 1, into a primitive
/// step and its multiplicity (the lattice length of the edge).
std::pair<PrimitiveStep, std::int64_t> primitive_step(std::int64_t dx, std::int64_t dy);

/// One bounded face of a staircase boundary: `count` primitive steps in a row.
struct PathEdge {
  PrimitiveStep step;
  std::int64_t count = 1;

  friend bool operator==(const PathEdge&, const PathEdge&) = default;
};

/// Number of lattice segments on the closed edge.
inline std::int64_t lattice_length(const PathEdge& e) { return e.count; }

/// The polygonal lower boundary of a Newton polyhedron with recession cone
/// R_+^2. Edges run left to right with strictly increasing slope; each edge
/// displaces by (count*run, -count*drop). The ray flags record whether the
/// boundary continues with a vertical ray above the start vertex and a
/// horizontal ray right of the end vertex.
class BoundaryPath {
 public:
  /// Validates convexity and merges adjacent edges with equal steps.
  BoundaryPath(LatticePoint start, std::vector<PathEdge> edges, bool left_vertical_ray = true,
               bool right_horizontal_ray = true);

  const LatticePoint& start() const { return start_; }
  const std::vector<PathEdge>& edges() const { return edges_; }
  bool has_left_vertical_ray() const { return left_ray_; }
  bool has_right_horizontal_ray() const { return right_ray_; }

  LatticePoint end() const;

  /// Start vertex, then one vertex per edge end, left to right.
  std::vector<LatticePoint> vertices() const;

  /// Minimal ordinate of the polyhedron over abscissa x, exactly.
  /// nullopt when the column at x is empty (left of the start vertex, or
  /// right of the end vertex when there is no horizontal ray).
  std::optional<Rational> floor_at(std::int64_t x) const;

  friend bool operator==(const BoundaryPath&, const BoundaryPath&) = default;

 private:
  LatticePoint start_;
  std::vector<PathEdge> edges_;
  bool left_ray_;
  bool right_ray_;
};

/// Componentwise-minimal elements of a point set, sorted by x ascending.
/// The result is an antichain: y strictly decreases along it.
std::vector<LatticePoint> minimal_points(std::span<const LatticePoint> points);

/// Boundary path of conv(points) + R_+^2. The start vertex is the hull
/// vertex of minimal x; every input point lies on or above the path and
/// every path vertex is an input point. Both ray flags are set.
BoundaryPath lower_left_hull(std::span<const LatticePoint> points);

/// Minimal lattice generators of the region on or above the path: one ceil
/// scan over the integer abscissas between the path endpoints, keeping the
/// points where the ceiling strictly drops.
std::vector<LatticePoint> staircase_generators(const BoundaryPath& path);

}  // namespace staircase

#endif  // STAIRCASE_LATTICE_HPP
