#ifndef STAIRCASE_MONOMIAL_IDEAL_HPP
#define STAIRCASE_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "staircase/lattice.hpp"

namespace staircase {

/// Finitely generated monomial ideal in two variables, stored as the sorted
/// antichain of its minimal generators. All exponents are >= 0; y strictly
/// decreases as x increases along the generator list. The unit ideal {(0,0)}
/// is allowed and is the identity for multiplication.
class MonomialIdeal {
 public:
  /// Canonicalize an arbitrary generating set: keep the componentwise-minimal
  /// points. Throws EmptyGeneratorSet / NotInPositiveQuadrant.
  static MonomialIdeal minimize(std::span<const LatticePoint> points);
  static MonomialIdeal minimize(std::initializer_list<LatticePoint> points) {
    return minimize(std::span<const LatticePoint>(points.begin(), points.end()));
  }

  const std::vector<LatticePoint>& generators() const { return gens_; }

  /// Monoid-ideal membership: some generator divides p.
  bool contains(LatticePoint p) const;

  bool is_unit() const { return gens_.size() == 1 && gens_[0] == LatticePoint{0, 0}; }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  explicit MonomialIdeal(std::vector<LatticePoint> antichain) : gens_(std::move(antichain)) {}

  std::vector<LatticePoint> gens_;

  friend MonomialIdeal integral_closure(const MonomialIdeal&);
};

/// Hull-based integral closure: the minimal generators of New(I) cap N^2,
/// found by the ceil scan along the lower boundary of the generator hull.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

/// Product ideal: the minimized generator sumset. Not automatically closed.
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);

bool is_integrally_closed(const MonomialIdeal& ideal);

/// Some pure power of each variable is present: the boundary meets both axes.
bool is_m_primary(const MonomialIdeal& ideal);

/// Brute-force membership test for the integral closure, independent of the
/// hull code: p is declared a member when r*p dominates a sum of r generators
/// for some r <= r_max. The r-fold sumsets are tabulated by dynamic
/// programming and cached, so one oracle serves many queries cheaply.
///
/// A false result is a sound under-approximation for too-small r_max; for
/// generators with exponents <= 8, r_max = 128 is exhaustive.
class ClosureOracle {
 public:
  ClosureOracle(const MonomialIdeal& ideal, std::int64_t r_max);

  bool contains(LatticePoint p);

  std::int64_t r_max() const { return r_max_; }

 private:
  const std::vector<std::int64_t>& stage(std::size_t r);

  std::vector<LatticePoint> gens_;
  std::int64_t r_max_;
  // stages_[r-1][x] = least y with some sum of r generators <= (x, y)
  // componentwise; unreachable columns hold an infinity sentinel.
  std::vector<std::vector<std::int64_t>> stages_;
};

/// One-shot convenience wrapper around ClosureOracle.
bool closure_contains_oracle(const MonomialIdeal& ideal, LatticePoint p, std::int64_t r_max);

}  // namespace staircase

#endif  // STAIRCASE_MONOMIAL_IDEAL_HPP
