#ifndef STAIRCASE_TESTS_HELPERS_HPP
#define STAIRCASE_TESTS_HELPERS_HPP

#include <vector>

#include "staircase/lattice.hpp"
#include "staircase/monomial_ideal.hpp"
#include "staircase/monomial_module.hpp"
#include "staircase/rng.hpp"

namespace staircase::testing {

inline std::vector<LatticePoint> pts(std::initializer_list<LatticePoint> list) {
  return std::vector<LatticePoint>(list);
}

// Quadratic dominance filter, the oracle for minimize().
inline std::vector<LatticePoint> naive_minimal_points(const std::vector<LatticePoint>& points) {
  std::vector<LatticePoint> kept;
  for (const LatticePoint& p : points) {
    bool minimal = true;
    for (const LatticePoint& q : points) {
      if (q != p && p.x >= q.x && p.y >= q.y) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      bool duplicate = false;
      for (const LatticePoint& k : kept) duplicate = duplicate || k == p;
      if (!duplicate) kept.push_back(p);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

inline std::vector<LatticePoint> random_points(Rng& rng, std::int64_t count, std::int64_t lo,
                                               std::int64_t hi) {
  std::vector<LatticePoint> points;
  for (std::int64_t i = 0; i < count; ++i) {
    points.push_back(LatticePoint{rng.range(lo, hi), rng.range(lo, hi)});
  }
  return points;
}

}  // namespace staircase::testing

#endif  // STAIRCASE_TESTS_HELPERS_HPP
