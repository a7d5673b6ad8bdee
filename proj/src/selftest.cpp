#include "staircase/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "staircase/calkin_wilf.hpp"
#include "staircase/factorization.hpp"
#include "staircase/io.hpp"
#include "staircase/monomial_module.hpp"

namespace staircase {

namespace {

using PointsPredicate = std::function<bool(const std::vector<LatticePoint>&)>;

// Greedy shrink: drop generators and pull coordinates toward zero while the
// point set keeps failing.
std::vector<LatticePoint> shrink_points(std::vector<LatticePoint> points,
                                        const PointsPredicate& fails) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < points.size() && points.size() > 1; ++i) {
      std::vector<LatticePoint> candidate = points;
      candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
      if (fails(candidate)) {
        points = std::move(candidate);
        improved = true;
        break;
      }
    }
    if (improved) continue;
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (int coord = 0; coord < 2; ++coord) {
        const std::int64_t value = coord == 0 ? points[i].x : points[i].y;
        const std::int64_t step_to_zero = value > 0 ? value - 1 : value + 1;
        for (std::int64_t smaller : {value / 2, step_to_zero}) {
          if (smaller == value || std::abs(smaller) > std::abs(value)) continue;
          std::vector<LatticePoint> candidate = points;
          (coord == 0 ? candidate[i].x : candidate[i].y) = smaller;
          if (fails(candidate)) {
            points = std::move(candidate);
            improved = true;
            break;
          }
        }
        if (improved) break;
      }
      if (improved) break;
    }
  }
  return points;
}

[[noreturn]] void report_points_violation(const std::string& law,
                                          std::vector<LatticePoint> points,
                                          const PointsPredicate& fails) {
  points = shrink_points(std::move(points), fails);
  std::string text;
  for (const LatticePoint& p : points) {
    if (!text.empty()) text += ", ";
    text += print_monomial(p);
  }
  throw PropertyViolation(law + "; minimized counterexample: " + text);
}

void check_points_law(const std::string& law, const std::vector<LatticePoint>& points,
                      const PointsPredicate& fails) {
  if (fails(points)) report_points_violation(law, points, fails);
}

std::vector<LatticePoint> random_points(Rng& rng, std::int64_t count, std::int64_t lo,
                                        std::int64_t hi) {
  std::vector<LatticePoint> points;
  points.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    points.push_back(LatticePoint{rng.range(lo, hi), rng.range(lo, hi)});
  }
  return points;
}

// --------------------------------------------------------------------------
// Suites. Each returns normally or throws PropertyViolation.

void suite_geometry(Rng& rng) {
  const std::vector<LatticePoint> points = random_points(rng, rng.range(1, 6), 0, 12);

  check_points_law("hull idempotence", points, [](const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return false;
    const BoundaryPath hull = lower_left_hull(pts);
    const std::vector<LatticePoint> vertices = hull.vertices();
    return lower_left_hull(vertices) != hull;
  });

  check_points_law("hull dominance", points, [](const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return false;
    const BoundaryPath hull = lower_left_hull(pts);
    for (const LatticePoint& p : pts) {
      const std::optional<Rational> floor = hull.floor_at(p.x);
      if (!floor || *floor > Rational(p.y)) return true;
    }
    return false;
  });

  // Exact sign oracle for the turn test.
  const LatticePoint a{rng.range(-50, 50), rng.range(-50, 50)};
  const LatticePoint b{rng.range(-50, 50), rng.range(-50, 50)};
  const LatticePoint c{rng.range(-50, 50), rng.range(-50, 50)};
  const __int128 cross = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                         static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  const int expected = cross > 0 ? 1 : cross < 0 ? -1 : 0;
  if (orientation(a, b, c) != expected) {
    throw PropertyViolation("orientation disagrees with the cross-product sign oracle at " +
                            print_monomial(a) + "; " + print_monomial(b) + "; " +
                            print_monomial(c));
  }
}

void suite_closure_laws(Rng& rng) {
  const MonomialIdeal ideal = random_ideal(rng, 4, 8);
  const MonomialIdeal other = random_ideal(rng, 4, 8);

  check_points_law("closure idempotence", ideal.generators(),
                   [](const std::vector<LatticePoint>& pts) {
                     const MonomialIdeal i = MonomialIdeal::minimize(pts);
                     const MonomialIdeal closed = integral_closure(i);
                     return integral_closure(closed) != closed;
                   });

  check_points_law("closure extensivity", ideal.generators(),
                   [](const std::vector<LatticePoint>& pts) {
                     const MonomialIdeal i = MonomialIdeal::minimize(pts);
                     const MonomialIdeal closed = integral_closure(i);
                     for (const LatticePoint& g : i.generators()) {
                       if (!closed.contains(g)) return true;
                     }
                     return false;
                   });

  // closure(I*J) == closure(closure(I)*closure(J))
  const auto product_law_fails = [&other](const std::vector<LatticePoint>& pts) {
    const MonomialIdeal i = MonomialIdeal::minimize(pts);
    const MonomialIdeal lhs = integral_closure(multiply(i, other));
    const MonomialIdeal rhs =
        integral_closure(multiply(integral_closure(i), integral_closure(other)));
    return lhs != rhs;
  };
  check_points_law("product-closure homomorphism (second factor " + print_ideal(other) + ")",
                   ideal.generators(), product_law_fails);
}

void suite_oracle_agreement(Rng& rng, std::int64_t r_max) {
  const MonomialIdeal ideal = random_ideal(rng, 4, 8);
  check_oracle_agreement(ideal, r_max, [](const MonomialIdeal& i, LatticePoint p) {
    return integral_closure(i).contains(p);
  });
}

std::string factorization_text(const Factorization& f) { return print_factorization(f); }

void suite_factorization_laws(Rng& rng) {
  const Factorization f = random_factorization(rng, 12, 4, 4);
  const Factorization g = random_factorization(rng, 12, 4, 4);

  const MonomialIdeal expanded = expand(f);
  if (factor(expanded) != f) {
    throw PropertyViolation("factor(expand(F)) != F for F = " + factorization_text(f));
  }
  if (expand(factor(expanded)) != expanded) {
    throw PropertyViolation("expand(factor(I)) != I for I = " + print_ideal(expanded));
  }

  const MonomialIdeal other = expand(g);
  const Factorization product = factor(integral_closure(multiply(expanded, other)));
  if (product != multiply_factorizations(f, g)) {
    throw PropertyViolation("factor(close(I*J)) is not the multiset sum of factors for F = " +
                            factorization_text(f) + ", G = " + factorization_text(g));
  }

  // Each factor corresponds to exactly one boundary face of matching length.
  const BoundaryPath hull = lower_left_hull(expanded.generators());
  if (hull.edges().size() != f.factors.size()) {
    throw PropertyViolation("face count differs from factor count for F = " +
                            factorization_text(f));
  }
  std::size_t index = 0;
  for (const auto& [slope, count] : f.factors) {
    const PathEdge& e = hull.edges()[index++];
    if (slope_of(e.step) != slope || lattice_length(e) != count) {
      throw PropertyViolation("face " + slope_of(e.step).str() +
                              " does not match factor " + slope.str() + " in F = " +
                              factorization_text(f));
    }
  }

  const Slope v = Slope::reduced(rng.range(1, 12), rng.range(1, 12));
  if (!is_simple(simple_ideal(v))) {
    throw PropertyViolation("simple_ideal(" + v.str() + ") is not simple");
  }
}

void suite_module_laws(Rng& rng) {
  const std::vector<LatticePoint> points = random_points(rng, rng.range(1, 5), -8, 8);
  const MonomialModule m = MonomialModule::minimize(points);

  check_points_law("module closure idempotence", points,
                   [](const std::vector<LatticePoint>& pts) {
                     const MonomialModule mod = MonomialModule::minimize(pts);
                     const MonomialModule closed = module_closure(mod);
                     return module_closure(closed) != closed;
                   });

  const auto [normalized, shift] = normalize(m);
  if (normalized.generators().front() != LatticePoint{0, 0} ||
      normalized.generators().front() + shift != m.generators().front()) {
    throw PropertyViolation("normalize did not move the leftmost vertex to the origin for " +
                            print_module(m));
  }

  const MonomialModule closed = module_closure(normalized);
  const FactorStream stream = factor_stream_of_module(closed);
  const std::int64_t full = stream.right().size().value_or(0);
  if (partial_sum(stream, 0, full) != closed) {
    throw PropertyViolation("partial_sum over all factors does not rebuild the closure of " +
                            print_module(m));
  }

  // Truncation maps are compatible: restricting to N' slopes and then to
  // N <= N' equals restricting to N directly.
  const Factorization f = random_factorization(rng, 6, 3, 4);
  const std::int64_t n = rng.range(0, 20);
  const std::int64_t n_prime = rng.range(n, 40);
  if (truncate_factorization(truncate_factorization(f, n_prime), n) !=
      truncate_factorization(f, n)) {
    throw PropertyViolation("truncation tower violated for F = " + factorization_text(f) +
                            ", N = " + std::to_string(n) + ", N' = " + std::to_string(n_prime));
  }

  // Consecutive diagonal partial sums agree between their endpoint vertices.
  const std::int64_t depth = rng.range(1, 4);
  const MonomialModule small = partial_sum(stream, depth, depth);
  const MonomialModule big = partial_sum(stream, depth + 1, depth + 1);
  const BoundaryPath small_hull = lower_left_hull(small.generators());
  const LatticePoint lo = small_hull.start();
  const LatticePoint hi = small_hull.end();
  if (lo.x <= hi.x && hi.y <= lo.y) {
    const Rect rect{lo.x, hi.x, hi.y, lo.y};
    if (Window(small, rect) != Window(big, rect)) {
      throw PropertyViolation("partial sums " + std::to_string(depth) + " and " +
                              std::to_string(depth + 1) +
                              " differ between their endpoint vertices for " + print_module(m));
    }
  }
}

void suite_io_round_trips(Rng& rng) {
  const MonomialIdeal ideal = random_ideal(rng, 4, 9);
  if (parse_generators(print_ideal(ideal)).to_ideal() != ideal) {
    throw PropertyViolation("parse(print(I)) != I for I = " + print_ideal(ideal));
  }
  if (ideal_from_json(to_json(ideal)) != ideal) {
    throw PropertyViolation("JSON round trip failed for I = " + print_ideal(ideal));
  }

  const std::vector<LatticePoint> points = random_points(rng, rng.range(1, 5), -9, 9);
  const MonomialModule m = MonomialModule::minimize(points);
  if (parse_generators(print_module(m)).to_module() != m) {
    throw PropertyViolation("parse(print(M)) != M for M = " + print_module(m));
  }
  if (module_from_json(to_json(m)) != m) {
    throw PropertyViolation("JSON round trip failed for M = " + print_module(m));
  }

  Factorization f = random_factorization(rng, 9, 4, 3);
  f.anchor = LatticePoint{rng.range(0, 5), rng.range(0, 5)};
  if (parse_factorization(print_factorization(f)) != f) {
    throw PropertyViolation("parse(print(F)) != F for F = " + factorization_text(f));
  }
  if (factorization_from_json(to_json(f)) != f) {
    throw PropertyViolation("JSON round trip failed for F = " + factorization_text(f));
  }
}

}  // namespace

MonomialIdeal random_ideal(Rng& rng, std::int64_t max_generators, std::int64_t max_exponent) {
  const std::int64_t count = rng.range(1, max_generators);
  return MonomialIdeal::minimize(random_points(rng, count, 0, max_exponent));
}

Factorization random_factorization(Rng& rng, std::int64_t max_slope_component,
                                   std::int64_t max_multiplicity, std::int64_t max_factors) {
  Factorization f;
  const std::int64_t count = rng.range(0, max_factors);
  for (std::int64_t i = 0; i < count; ++i) {
    const Slope v =
        Slope::reduced(rng.range(1, max_slope_component), rng.range(1, max_slope_component));
    f.factors[v] = rng.range(1, max_multiplicity);
  }
  return f;
}

void check_oracle_agreement(
    const MonomialIdeal& ideal, std::int64_t r_max,
    const std::function<bool(const MonomialIdeal&, LatticePoint)>& membership) {
  const auto fails = [&](const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return false;
    for (const LatticePoint& p : pts) {
      if (p.x < 0 || p.y < 0) return false;
    }
    const MonomialIdeal i = MonomialIdeal::minimize(pts);
    std::int64_t max_x = 0;
    std::int64_t max_y = 0;
    for (const LatticePoint& g : i.generators()) {
      max_x = std::max(max_x, g.x);
      max_y = std::max(max_y, g.y);
    }
    ClosureOracle oracle(i, r_max);
    for (std::int64_t x = 0; x <= max_x; ++x) {
      for (std::int64_t y = 0; y <= max_y; ++y) {
        const LatticePoint p{x, y};
        if (membership(i, p) != oracle.contains(p)) return true;
      }
    }
    return false;
  };
  check_points_law("hull membership disagrees with the sumset oracle", ideal.generators(), fails);
}

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  report.seed = options.seed;
  report.requested = options.cases;

  struct Suite {
    const char* name;
    std::function<void(Rng&)> run;
  };
  const std::vector<Suite> suites{
      {"geometry", [](Rng& rng) { suite_geometry(rng); }},
      {"closure-laws", [](Rng& rng) { suite_closure_laws(rng); }},
      {"oracle-agreement",
       [&options](Rng& rng) { suite_oracle_agreement(rng, options.r_max); }},
      {"factorization-laws", [](Rng& rng) { suite_factorization_laws(rng); }},
      {"module-laws", [](Rng& rng) { suite_module_laws(rng); }},
      {"io-round-trips", [](Rng& rng) { suite_io_round_trips(rng); }},
  };
  for (const Suite& suite : suites) {
    report.timings.push_back(SuiteTiming{suite.name, 0});
  }

  Rng rng(options.seed);
  using Clock = std::chrono::steady_clock;
  for (std::int64_t i = 0; i < options.cases; ++i) {
    for (std::size_t s = 0; s < suites.size(); ++s) {
      const auto begin = Clock::now();
      suites[s].run(rng);
      const auto end = Clock::now();
      report.timings[s].millis +=
          std::chrono::duration_cast<std::chrono::milliseconds>(end - begin).count();
    }
    ++report.passed;
  }
  return report;
}

}  // namespace staircase
