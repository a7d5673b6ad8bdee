#ifndef STAIRCASE_FACTORIZATION_HPP
#define STAIRCASE_FACTORIZATION_HPP

#include <cstdint>
#include <map>

#include "staircase/lattice.hpp"
#include "staircase/monomial_ideal.hpp"

namespace staircase {

/// Finite multiset of simple-ideal factors plus a monomial translation.
/// The anchor is the corner (min generator x, min generator y) of the ideal
/// the factorization describes; it is (0,0) exactly for m-primary ideals.
/// As ideal classes modulo translation, two factorizations are equal iff
/// their factor maps are equal.
struct Factorization {
  LatticePoint anchor{0, 0};
  std::map<Slope, std::int64_t> factors;  // slope -> multiplicity >= 1

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// E at slope r/s: the integral closure of (x^r, y^s). Its boundary has one
/// edge with primitive step (r, s) and multiplicity 1; these are exactly the
/// ideals that admit no factorization into proper parts.
MonomialIdeal simple_ideal(Slope v);

/// Decompose an integrally closed ideal by scanning its boundary faces left
/// to right: an edge with primitive step (r, s) and lattice length b
/// contributes the factor r/s -> b. Throws NotIntegrallyClosed when the
/// input is not its own closure; close first in that case.
Factorization factor(const MonomialIdeal& ideal);

/// Rebuild the ideal from its factors: lay out the edges in increasing slope
/// order starting at anchor + (0, sum of drops) and read the generators off
/// the path. Inverse to factor().
MonomialIdeal expand(const Factorization& f);

/// The free abelian monoid operation: anchors add, multiplicity maps add.
Factorization multiply_factorizations(const Factorization& a, const Factorization& b);

/// True iff the ideal is a simple ideal itself: one factor, multiplicity 1,
/// no translation. Requires an integrally closed input.
bool is_simple(const MonomialIdeal& ideal);

}  // namespace staircase

#endif  // STAIRCASE_FACTORIZATION_HPP
