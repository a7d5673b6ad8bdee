#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "staircase/monomial_ideal.hpp"
#include "staircase/rng.hpp"
#include "staircase/selftest.hpp"

using namespace staircase;
using staircase::testing::pts;

TEST_CASE("minimize keeps the componentwise-minimal generators") {
  CHECK(MonomialIdeal::minimize({{2, 0}, {0, 2}, {2, 2}}).generators() == pts({{0, 2}, {2, 0}}));
  CHECK(MonomialIdeal::minimize({{1, 1}}).generators() == pts({{1, 1}}));
  CHECK(MonomialIdeal::minimize({{0, 3}, {1, 3}, {2, 2}, {3, 1}, {4, 0}}).generators() ==
        pts({{0, 3}, {2, 2}, {3, 1}, {4, 0}}));
}

TEST_CASE("minimize rejects empty and non-positive input") {
  CHECK_THROWS_AS(MonomialIdeal::minimize(std::span<const LatticePoint>{}), EmptyGeneratorSet);
  CHECK_THROWS_AS(MonomialIdeal::minimize({{1, -1}}), NotInPositiveQuadrant);
}

TEST_CASE("contains tests divisibility by some generator") {
  const MonomialIdeal squares = MonomialIdeal::minimize({{2, 0}, {0, 2}});
  CHECK_FALSE(squares.contains({1, 1}));
  CHECK(squares.contains({2, 5}));
  CHECK_FALSE(MonomialIdeal::minimize({{1, 0}, {0, 1}}).contains({0, 0}));
}

TEST_CASE("integral closure of (x^2, y^2) adds xy") {
  const MonomialIdeal closed = integral_closure(MonomialIdeal::minimize({{2, 0}, {0, 2}}));
  CHECK(closed.generators() == pts({{0, 2}, {1, 1}, {2, 0}}));
  CHECK(closed.contains({1, 1}));
}

TEST_CASE("integral closure of (x^4, y^3)") {
  CHECK(integral_closure(MonomialIdeal::minimize({{0, 3}, {4, 0}})).generators() ==
        pts({{0, 3}, {2, 2}, {3, 1}, {4, 0}}));
}

TEST_CASE("integral closure of (x^3, y^2) agrees with the sumset oracle on its box") {
  const MonomialIdeal ideal = MonomialIdeal::minimize({{0, 2}, {3, 0}});
  const MonomialIdeal closed = integral_closure(ideal);
  CHECK(closed.generators() == pts({{0, 2}, {2, 1}, {3, 0}}));

  ClosureOracle oracle(ideal, 64);
  for (std::int64_t x = 0; x <= 3; ++x) {
    for (std::int64_t y = 0; y <= 2; ++y) {
      CHECK(closed.contains({x, y}) == oracle.contains({x, y}));
    }
  }
}

TEST_CASE("closure_contains_oracle examples") {
  const MonomialIdeal squares = MonomialIdeal::minimize({{2, 0}, {0, 2}});
  CHECK(closure_contains_oracle(squares, {1, 1}, 2));
  CHECK_FALSE(closure_contains_oracle(squares, {0, 1}, 64));
  CHECK(closure_contains_oracle(MonomialIdeal::minimize({{0, 2}, {3, 0}}), {2, 1}, 6));
}

TEST_CASE("multiply forms the minimized generator sumset") {
  const MonomialIdeal maximal = MonomialIdeal::minimize({{1, 0}, {0, 1}});
  CHECK(multiply(maximal, maximal).generators() == pts({{0, 2}, {1, 1}, {2, 0}}));

  const MonomialIdeal e43 = integral_closure(MonomialIdeal::minimize({{4, 0}, {0, 3}}));
  const MonomialIdeal e52 = integral_closure(MonomialIdeal::minimize({{5, 0}, {0, 2}}));
  CHECK(multiply(e43, e52).generators() ==
        pts({{0, 5}, {2, 4}, {3, 3}, {4, 2}, {7, 1}, {9, 0}}));

  const MonomialIdeal unit = MonomialIdeal::minimize({{0, 0}});
  CHECK(multiply(e43, unit) == e43);
  CHECK(unit.is_unit());
}

TEST_CASE("closed and m-primary predicates") {
  const MonomialIdeal squares = MonomialIdeal::minimize({{2, 0}, {0, 2}});
  CHECK_FALSE(is_integrally_closed(squares));
  CHECK(is_m_primary(squares));

  const MonomialIdeal product =
      MonomialIdeal::minimize({{0, 5}, {2, 4}, {3, 3}, {4, 2}, {7, 1}, {9, 0}});
  CHECK(is_integrally_closed(product));
  CHECK(is_m_primary(product));

  const MonomialIdeal principal = MonomialIdeal::minimize({{1, 1}});
  CHECK(is_integrally_closed(principal));
  CHECK_FALSE(is_m_primary(principal));
}

TEST_CASE("closure is idempotent and extensive on random ideals") {
  Rng rng(21);
  for (int i = 0; i < 150; ++i) {
    const MonomialIdeal ideal = random_ideal(rng, 4, 8);
    const MonomialIdeal closed = integral_closure(ideal);
    CHECK(integral_closure(closed) == closed);
    for (const LatticePoint& g : ideal.generators()) CHECK(closed.contains(g));

    // Every operation returns a valid antichain.
    const auto& gens = closed.generators();
    for (std::size_t k = 1; k < gens.size(); ++k) {
      CHECK(gens[k - 1].x < gens[k].x);
      CHECK(gens[k - 1].y > gens[k].y);
    }
  }
}

TEST_CASE("closure commutes with products on random ideals") {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const MonomialIdeal a = random_ideal(rng, 4, 8);
    const MonomialIdeal b = random_ideal(rng, 4, 8);
    CHECK(integral_closure(multiply(a, b)) ==
          integral_closure(multiply(integral_closure(a), integral_closure(b))));
  }
}

TEST_CASE("the selftest suites pass and catch deliberate corruption") {
  CHECK_NOTHROW(run_selftest(SelftestOptions{3, 10, 64}));

  // Negative control: a membership function that claims the whole quadrant
  // must be flagged with a minimized counterexample.
  const MonomialIdeal squares = MonomialIdeal::minimize({{2, 0}, {0, 2}});
  try {
    check_oracle_agreement(squares, 64, [](const MonomialIdeal&, LatticePoint p) {
      return p.x >= 0 && p.y >= 0;
    });
    FAIL("expected PropertyViolation");
  } catch (const PropertyViolation& e) {
    CHECK(std::string(e.what()).find("minimized counterexample") != std::string::npos);
  }
}

TEST_CASE("hull membership agrees with the sumset oracle on random ideals") {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    const MonomialIdeal ideal = random_ideal(rng, 4, 8);
    const MonomialIdeal closed = integral_closure(ideal);
    std::int64_t max_x = 0, max_y = 0;
    for (const LatticePoint& g : ideal.generators()) {
      max_x = std::max(max_x, g.x);
      max_y = std::max(max_y, g.y);
    }
    ClosureOracle oracle(ideal, 128);
    for (std::int64_t x = 0; x <= max_x; ++x) {
      for (std::int64_t y = 0; y <= max_y; ++y) {
        CHECK(closed.contains({x, y}) == oracle.contains({x, y}));
      }
    }
  }
}
