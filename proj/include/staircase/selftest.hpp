#ifndef STAIRCASE_SELFTEST_HPP
#define STAIRCASE_SELFTEST_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "staircase/factorization.hpp"
#include "staircase/monomial_ideal.hpp"
#include "staircase/rng.hpp"

namespace staircase {

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::int64_t cases = 100;
  std::int64_t r_max = 128;
};

struct SuiteTiming {
  std::string name;
  std::int64_t millis = 0;
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::int64_t requested = 0;
  std::int64_t passed = 0;
  std::vector<SuiteTiming> timings;
};

/// Run the randomized property suites over `cases` independent instances.
/// Throws PropertyViolation with a minimized counterexample on the first
/// failing law; otherwise reports counts and per-suite timings.
SelftestReport run_selftest(const SelftestOptions& options);

/// The oracle-agreement law for one ideal: every lattice point of the
/// generator bounding box must get the same verdict from `membership` and
/// from the sumset oracle at depth r_max. The default membership is the
/// hull-based closure; tests can inject a broken one to confirm that
/// violations are caught and reported.
void check_oracle_agreement(
    const MonomialIdeal& ideal, std::int64_t r_max,
    const std::function<bool(const MonomialIdeal&, LatticePoint)>& membership);

/// Random generators shared by the selftest and the test suites.
MonomialIdeal random_ideal(Rng& rng, std::int64_t max_generators, std::int64_t max_exponent);
Factorization random_factorization(Rng& rng, std::int64_t max_slope_component,
                                   std::int64_t max_multiplicity, std::int64_t max_factors);

}  // namespace staircase

#endif  // STAIRCASE_SELFTEST_HPP
