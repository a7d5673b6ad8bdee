#include "staircase/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace staircase {

int orientation(LatticePoint a, LatticePoint b, LatticePoint c) {
  // Differences fit in int64 by checked_sub; the 128-bit products then
  // stay strictly inside __int128.
  const std::int64_t abx = checked_sub(b.x, a.x);
  const std::int64_t aby = checked_sub(b.y, a.y);
  const std::int64_t acx = checked_sub(c.x, a.x);
  const std::int64_t acy = checked_sub(c.y, a.y);
  const __int128 cross =
      static_cast<__int128>(abx) * acy - static_cast<__int128>(aby) * acx;
  if (cross > 0) return 1;
  if (cross < 0) return -1;
  return 0;
}

Slope Slope::reduced(std::int64_t num, std::int64_t den) {
  if (num < 1 || den < 1) throw DegenerateEdge("slope components must be positive");
  const std::int64_t g = std::gcd(num, den);
  return Slope{num / g, den / g};
}

std::pair<PrimitiveStep, std::int64_t> primitive_step(std::int64_t dx, std::int64_t dy) {
  if (dx < 1 || dy < 1) {
    throw DegenerateEdge("edge displacement must be positive in both coordinates, got (" +
                         std::to_string(dx) + "," + std::to_string(dy) + ")");
  }
  const std::int64_t g = std::gcd(dx, dy);
  return {PrimitiveStep{dx / g, dy / g}, g};
}

BoundaryPath::BoundaryPath(LatticePoint start, std::vector<PathEdge> edges, bool left_vertical_ray,
                           bool right_horizontal_ray)
    : start_(start), left_ray_(left_vertical_ray), right_ray_(right_horizontal_ray) {
  edges_.reserve(edges.size());
  for (const PathEdge& e : edges) {
    if (e.count < 1) throw DegenerateEdge("edge multiplicity must be positive");
    if (std::gcd(e.step.run, e.step.drop) != 1 || e.step.run < 1 || e.step.drop < 1) {
      throw DegenerateEdge("edge step must be primitive and positive");
    }
    if (!edges_.empty() && edges_.back().step == e.step) {
      edges_.back().count = checked_add(edges_.back().count, e.count);
      continue;
    }
    if (!edges_.empty() && !(slope_of(edges_.back().step) < slope_of(e.step))) {
      throw DegenerateEdge("edge slopes must strictly increase along the path");
    }
    edges_.push_back(e);
  }
}

LatticePoint BoundaryPath::end() const {
  LatticePoint v = start_;
  for (const PathEdge& e : edges_) {
    v.x = checked_add(v.x, checked_mul(e.count, e.step.run));
    v.y = checked_sub(v.y, checked_mul(e.count, e.step.drop));
  }
  return v;
}

std::vector<LatticePoint> BoundaryPath::vertices() const {
  std::vector<LatticePoint> vs;
  vs.reserve(edges_.size() + 1);
  LatticePoint v = start_;
  vs.push_back(v);
  for (const PathEdge& e : edges_) {
    v.x = checked_add(v.x, checked_mul(e.count, e.step.run));
    v.y = checked_sub(v.y, checked_mul(e.count, e.step.drop));
    vs.push_back(v);
  }
  return vs;
}

std::optional<Rational> BoundaryPath::floor_at(std::int64_t x) const {
  if (x < start_.x) return std::nullopt;
  LatticePoint v = start_;
  for (const PathEdge& e : edges_) {
    const std::int64_t width = checked_mul(e.count, e.step.run);
    const std::int64_t right = checked_add(v.x, width);
    if (x <= right) {
      // v.y - drop * (x - v.x) / run
      const std::int64_t dx = checked_sub(x, v.x);
      const std::int64_t num =
          checked_sub(checked_mul(v.y, e.step.run), checked_mul(e.step.drop, dx));
      return Rational(num, e.step.run);
    }
    v.x = right;
    v.y = checked_sub(v.y, checked_mul(e.count, e.step.drop));
  }
  if (x == v.x) return Rational(v.y);
  if (!right_ray_) return std::nullopt;
  return Rational(v.y);
}

std::vector<LatticePoint> minimal_points(std::span<const LatticePoint> points) {
  std::vector<LatticePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<LatticePoint> kept;
  kept.reserve(sorted.size());
  for (const LatticePoint& p : sorted) {
    // sorted by (x asc, y asc): p is minimal iff its y is below every y kept
    // so far (earlier points all have x <= p.x).
    if (kept.empty() || p.y < kept.back().y) kept.push_back(p);
  }
  return kept;
}

BoundaryPath lower_left_hull(std::span<const LatticePoint> points) {
  if (points.empty()) throw EmptyGeneratorSet("cannot take the hull of an empty point set");
  const std::vector<LatticePoint> antichain = minimal_points(points);

  // Monotone chain over the antichain; collinear interior vertices are
  // dropped so every hull edge is one maximal segment.
  std::vector<LatticePoint> hull;
  hull.reserve(antichain.size());
  for (const LatticePoint& p : antichain) {
    while (hull.size() >= 2 && orientation(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }

  std::vector<PathEdge> edges;
  edges.reserve(hull.size());
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const std::int64_t dx = checked_sub(hull[i].x, hull[i - 1].x);
    const std::int64_t dy = checked_sub(hull[i - 1].y, hull[i].y);
    auto [step, count] = primitive_step(dx, dy);
    edges.push_back(PathEdge{step, count});
  }
  return BoundaryPath(hull.front(), std::move(edges));
}

std::vector<LatticePoint> staircase_generators(const BoundaryPath& path) {
  std::vector<LatticePoint> gens;
  const LatticePoint end = path.end();
  std::int64_t previous_y = 0;
  bool have_previous = false;
  for (std::int64_t x = path.start().x; x <= end.x; ++x) {
    const std::optional<Rational> f = path.floor_at(x);
    const std::int64_t y = f->ceil();
    if (!have_previous || y < previous_y) {
      gens.push_back(LatticePoint{x, y});
      previous_y = y;
      have_previous = true;
    }
  }
  return gens;
}

}  // namespace staircase
