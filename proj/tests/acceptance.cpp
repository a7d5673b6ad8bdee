// Acceptance suite: every criterion prints one PASS/FAIL line with its
// runtime; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "staircase/calkin_wilf.hpp"
#include "staircase/factorization.hpp"
#include "staircase/io.hpp"
#include "staircase/monomial_ideal.hpp"
#include "staircase/monomial_module.hpp"
#include "staircase/rng.hpp"
#include "staircase/selftest.hpp"

using namespace staircase;

namespace {

struct Criterion {
  int id;
  std::string description;
  double budget_ms;
  std::function<bool(std::string&)> check;
};

bool table_ic1(std::string& detail) {
  const MonomialIdeal squares = MonomialIdeal::minimize({{2, 0}, {0, 2}});
  const MonomialIdeal closed = integral_closure(squares);
  if (closed.generators() != std::vector<LatticePoint>{{0, 2}, {1, 1}, {2, 0}}) {
    detail = "closure generators: " + print_ideal(closed);
    return false;
  }
  if (squares.contains({1, 1})) {
    detail = "(1,1) must not lie in (x^2, y^2)";
    return false;
  }
  if (!closed.contains({1, 1})) {
    detail = "(1,1) must lie in the closure";
    return false;
  }
  return true;
}

bool figure_ic2(std::string& detail) {
  const MonomialIdeal e43 = simple_ideal({4, 3});
  const MonomialIdeal e52 = simple_ideal({5, 2});
  if (e43.generators() != std::vector<LatticePoint>{{0, 3}, {2, 2}, {3, 1}, {4, 0}}) {
    detail = "E[4/3] = " + print_ideal(e43);
    return false;
  }
  if (e52.generators() != std::vector<LatticePoint>{{0, 2}, {3, 1}, {5, 0}}) {
    detail = "E[5/2] = " + print_ideal(e52);
    return false;
  }
  const MonomialIdeal product = integral_closure(multiply(e43, e52));
  if (product.generators() !=
      std::vector<LatticePoint>{{0, 5}, {2, 4}, {3, 3}, {4, 2}, {7, 1}, {9, 0}}) {
    detail = "product closure = " + print_ideal(product);
    return false;
  }
  Factorization expected;
  expected.factors[Slope{4, 3}] = 1;
  expected.factors[Slope{5, 2}] = 1;
  if (factor(product) != expected) {
    detail = "factorization = " + print_factorization(factor(product));
    return false;
  }
  return true;
}

bool figure_infmin(std::string& detail) {
  const FactorStream stream = FactorStream::make({0, 0}, FactorSide::triangular());
  const MonomialModule approx = partial_sum(stream, 0, 4);
  const std::vector<LatticePoint> expected{{0, 0}, {1, -1}, {3, -2}, {6, -3}, {10, -4}};
  if (lower_left_hull(approx.generators()).vertices() != expected) {
    detail = "vertices of the 4-term partial sum differ";
    return false;
  }
  if (module_closure(MonomialModule::minimize(expected)) != approx) {
    detail = "closure of the raw generators differs from the partial sum";
    return false;
  }
  return true;
}

bool maximal_ideal_truncations(std::string& detail) {
  for (std::int64_t a = 1; a <= 4; ++a) {
    const MonomialIdeal truncated = quadrant_truncation(antidiagonal_prefix_module(a), a);
    Factorization power;
    power.factors[Slope{1, 1}] = 2 * a;
    const MonomialIdeal expected = expand(power);
    if (integral_closure(truncated) != expected) {
      detail = "a = " + std::to_string(a) + ": truncation closure is " +
               print_ideal(integral_closure(truncated));
      return false;
    }
    // The exponent 2a is pinned independently by the sumset oracle.
    ClosureOracle oracle(truncated, 128);
    for (std::int64_t x = 0; x <= 2 * a; ++x) {
      for (std::int64_t y = 0; y <= 2 * a; ++y) {
        if (oracle.contains({x, y}) != expected.contains({x, y})) {
          detail = "a = " + std::to_string(a) + ": oracle disagrees at (" + std::to_string(x) +
                   "," + std::to_string(y) + ")";
          return false;
        }
      }
    }
  }
  return true;
}

bool oracle_equivalence(std::string& detail) {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    const MonomialIdeal ideal = random_ideal(rng, 4, 8);
    const MonomialIdeal closed = integral_closure(ideal);
    std::int64_t max_x = 0;
    std::int64_t max_y = 0;
    for (const LatticePoint& g : ideal.generators()) {
      max_x = std::max(max_x, g.x);
      max_y = std::max(max_y, g.y);
    }
    ClosureOracle oracle(ideal, 128);
    for (std::int64_t x = 0; x <= max_x; ++x) {
      for (std::int64_t y = 0; y <= max_y; ++y) {
        if (closed.contains({x, y}) != oracle.contains({x, y})) {
          detail = "case " + std::to_string(i) + ", ideal " + print_ideal(ideal) +
                   ", point (" + std::to_string(x) + "," + std::to_string(y) + ")";
          return false;
        }
      }
    }
  }
  return true;
}

bool free_monoid_laws(std::string& detail) {
  Rng rng(2025);
  for (int i = 0; i < 500; ++i) {
    const Factorization f = random_factorization(rng, 12, 4, 4);
    const Factorization g = random_factorization(rng, 12, 4, 4);
    const MonomialIdeal a = expand(f);
    const MonomialIdeal b = expand(g);

    if (factor(a) != f || factor(b) != g) {
      detail = "factor(expand(F)) != F at case " + std::to_string(i);
      return false;
    }
    if (expand(factor(a)) != a) {
      detail = "expand(factor(I)) != I at case " + std::to_string(i);
      return false;
    }
    const MonomialIdeal product = integral_closure(multiply(a, b));
    if (integral_closure(product) != product) {
      detail = "closure not idempotent at case " + std::to_string(i);
      return false;
    }
    if (factor(product) != multiply_factorizations(f, g)) {
      detail = "factor(close(I*J)) != F+G at case " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool inverse_system(std::string& detail) {
  Rng rng(2026);
  for (int i = 0; i < 100; ++i) {
    const Factorization f = random_factorization(rng, 10, 4, 6);
    for (std::int64_t n_prime = 0; n_prime <= 40; ++n_prime) {
      const Factorization outer = truncate_factorization(f, n_prime);
      for (std::int64_t n = 0; n <= n_prime; ++n) {
        if (truncate_factorization(outer, n) != truncate_factorization(f, n)) {
          detail = "case " + std::to_string(i) + ", N = " + std::to_string(n) +
                   ", N' = " + std::to_string(n_prime);
          return false;
        }
      }
    }
  }
  return true;
}

bool convergence_check(std::string& detail) {
  const FactorStream stream = FactorStream::make({0, 0}, FactorSide::triangular());
  const Rect rect{0, 10, -5, 1};
  const StabilizationReport report = check_convergence(stream, rect, 1, 12);
  if (!report.stable_from || *report.stable_from != 4) {
    detail = report.stable_from ? "stabilized at " + std::to_string(*report.stable_from)
                                : "did not stabilize";
    return false;
  }
  if (report.window != Window(partial_sum(stream, 12, 12), rect)) {
    detail = "stable window differs from the n = 12 window";
    return false;
  }
  try {
    admit_module(ModuleDescription{ModuleDescription::Family{"antidiagonal", {}, {}, {}}});
    detail = "antidiagonal family was admitted";
    return false;
  } catch (const NonAdmissibleModule&) {
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Table ic1 regression: closure of (x^2, y^2)", 1.0, table_ic1},
      {2, "Figure ic2 regression: E[4/3]*E[5/2] product and factorization", 10.0, figure_ic2},
      {3, "Figure infmin regression: triangular partial sum", 10.0, figure_infmin},
      {4, "maximal-ideal truncations of the antidiagonal prefix", 50.0,
       maximal_ideal_truncations},
      {5, "oracle equivalence on 200 random ideals", 30000.0, oracle_equivalence},
      {6, "free-monoid laws on 500 random pairs", 30000.0, free_monoid_laws},
      {7, "inverse-system compatibility up to N = 40", 5000.0, inverse_system},
      {8, "window stabilization and antidiagonal rejection", 1000.0, convergence_check},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool ok = false;
    const auto begin = std::chrono::steady_clock::now();
    try {
      ok = criterion.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto end = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(end - begin).count();
    if (ok && ms > criterion.budget_ms) {
      ok = false;
      detail = "over budget (" + std::to_string(criterion.budget_ms) + " ms)";
    }
    std::printf("%s %d: %s (%.2f ms)%s%s\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.description.c_str(), ms, detail.empty() ? "" : " - ",
                detail.c_str());
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
