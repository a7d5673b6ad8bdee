#include "staircase/monomial_ideal.hpp"

#include <algorithm>

namespace staircase {

MonomialIdeal MonomialIdeal::minimize(std::span<const LatticePoint> points) {
  if (points.empty()) throw EmptyGeneratorSet("a monomial ideal needs at least one generator");
  for (const LatticePoint& p : points) {
    if (p.x < 0 || p.y < 0) {
      throw NotInPositiveQuadrant("ideal generator (" + std::to_string(p.x) + "," +
                                  std::to_string(p.y) + ") has a negative exponent");
    }
  }
  return MonomialIdeal(minimal_points(points));
}

bool MonomialIdeal::contains(LatticePoint p) const {
  // Generators are sorted by x ascending with y strictly descending, so the
  // best candidate divisor is the last generator with x <= p.x.
  auto it = std::upper_bound(gens_.begin(), gens_.end(), p.x,
                             [](std::int64_t x, const LatticePoint& g) { return x < g.x; });
  if (it == gens_.begin()) return false;
  return std::prev(it)->y <= p.y;
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  const BoundaryPath hull = lower_left_hull(ideal.generators());
  return MonomialIdeal(staircase_generators(hull));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<LatticePoint> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const LatticePoint& g : a.generators()) {
    for (const LatticePoint& h : b.generators()) {
      sums.push_back(g + h);
    }
  }
  return MonomialIdeal::minimize(sums);
}

bool is_integrally_closed(const MonomialIdeal& ideal) { return ideal == integral_closure(ideal); }

bool is_m_primary(const MonomialIdeal& ideal) {
  return ideal.generators().front().x == 0 && ideal.generators().back().y == 0;
}

namespace {

constexpr std::int64_t kUnreachable = INT64_MAX;

}  // namespace

ClosureOracle::ClosureOracle(const MonomialIdeal& ideal, std::int64_t r_max)
    : gens_(ideal.generators()), r_max_(r_max) {
  if (r_max_ < 1) throw Error("oracle depth must be at least 1");
  // Bounds the table values up front; the stage loops may then add freely.
  std::int64_t max_y = 0;
  for (const LatticePoint& g : gens_) max_y = std::max(max_y, g.y);
  checked_mul(r_max_, std::max(gens_.back().x, max_y));
}

const std::vector<std::int64_t>& ClosureOracle::stage(std::size_t r) {
  while (stages_.size() < r) {
    const std::int64_t max_x = gens_.back().x;
    if (stages_.empty()) {
      std::vector<std::int64_t> first(static_cast<std::size_t>(max_x) + 1, kUnreachable);
      for (const LatticePoint& g : gens_) {
        first[static_cast<std::size_t>(g.x)] = std::min(first[static_cast<std::size_t>(g.x)], g.y);
      }
      for (std::size_t x = 1; x < first.size(); ++x) {
        first[x] = std::min(first[x], first[x - 1]);
      }
      stages_.push_back(std::move(first));
      continue;
    }
    const std::vector<std::int64_t>& prev = stages_.back();
    const std::size_t width = prev.size() + static_cast<std::size_t>(max_x);
    std::vector<std::int64_t> next(width, kUnreachable);
    for (const LatticePoint& g : gens_) {
      for (std::size_t x = static_cast<std::size_t>(g.x); x < width; ++x) {
        const std::size_t from = std::min(x - static_cast<std::size_t>(g.x), prev.size() - 1);
        if (prev[from] == kUnreachable) continue;
        next[x] = std::min(next[x], prev[from] + g.y);
      }
    }
    stages_.push_back(std::move(next));
  }
  return stages_[r - 1];
}

bool ClosureOracle::contains(LatticePoint p) {
  if (p.x < 0 || p.y < 0) return false;
  for (std::int64_t r = 1; r <= r_max_; ++r) {
    const std::vector<std::int64_t>& row = stage(static_cast<std::size_t>(r));
    const std::int64_t target_x = checked_mul(r, p.x);
    const std::int64_t target_y = checked_mul(r, p.y);
    const std::size_t column =
        std::min(static_cast<std::size_t>(target_x), row.size() - 1);
    if (row[column] != kUnreachable && row[column] <= target_y) return true;
  }
  return false;
}

bool closure_contains_oracle(const MonomialIdeal& ideal, LatticePoint p, std::int64_t r_max) {
  return ClosureOracle(ideal, r_max).contains(p);
}

}  // namespace staircase
