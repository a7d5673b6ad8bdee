#include "staircase/factorization.hpp"

#include <algorithm>

namespace staircase {

MonomialIdeal simple_ideal(Slope v) {
  const Slope reduced = Slope::reduced(v.num, v.den);
  if (reduced != v) throw DegenerateEdge("slope " + v.str() + " is not reduced");
  return integral_closure(
      MonomialIdeal::minimize({LatticePoint{v.num, 0}, LatticePoint{0, v.den}}));
}

Factorization factor(const MonomialIdeal& ideal) {
  if (!is_integrally_closed(ideal)) {
    throw NotIntegrallyClosed("only integrally closed ideals factor into simple ideals");
  }
  Factorization f;
  // The corner translation: after shifting by -anchor the ideal is m-primary.
  f.anchor = LatticePoint{ideal.generators().front().x, ideal.generators().back().y};
  const BoundaryPath hull = lower_left_hull(ideal.generators());
  for (const PathEdge& e : hull.edges()) {
    f.factors[slope_of(e.step)] = e.count;
  }
  return f;
}

MonomialIdeal expand(const Factorization& f) {
  if (f.anchor.x < 0 || f.anchor.y < 0) {
    throw NotInPositiveQuadrant("factorization anchor lies outside N^2");
  }
  std::int64_t total_drop = 0;
  for (const auto& [slope, count] : f.factors) {
    if (count < 1) throw DegenerateEdge("factor multiplicity must be positive");
    total_drop = checked_add(total_drop, checked_mul(count, slope.den));
  }
  std::vector<PathEdge> edges;
  edges.reserve(f.factors.size());
  for (const auto& [slope, count] : f.factors) {
    edges.push_back(PathEdge{PrimitiveStep{slope.num, slope.den}, count});
  }
  const LatticePoint start{f.anchor.x, checked_add(f.anchor.y, total_drop)};
  const BoundaryPath path(start, std::move(edges));
  return MonomialIdeal::minimize(staircase_generators(path));
}

Factorization multiply_factorizations(const Factorization& a, const Factorization& b) {
  Factorization product = a;
  product.anchor = a.anchor + b.anchor;
  for (const auto& [slope, count] : b.factors) {
    auto [it, inserted] = product.factors.try_emplace(slope, count);
    if (!inserted) it->second = checked_add(it->second, count);
  }
  return product;
}

bool is_simple(const MonomialIdeal& ideal) {
  const Factorization f = factor(ideal);
  return f.anchor == LatticePoint{0, 0} && f.factors.size() == 1 &&
         f.factors.begin()->second == 1;
}

}  // namespace staircase
