// Acceptance suite: one test case per criterion, each printing a pass/fail
// line per check plus the elapsed time budget.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "fprf/validation.hpp"

using fprf::validation::run_scenario;

namespace {

constexpr std::uint64_t kSeed = 20240717;

void run(int criterion, const char* scenario, double budget_seconds) {
    auto rep = run_scenario(scenario, kSeed);
    for (const auto& ch : rep.checks) {
        std::printf("[%s] criterion %2d %-18s %-36s statistic=%.6g threshold=%.3g\n",
                    ch.pass ? "PASS" : "FAIL", criterion, scenario, ch.name.c_str(),
                    ch.statistic, ch.threshold);
        CHECK_MESSAGE(ch.pass, scenario, ": ", ch.name);
    }
    std::printf("         criterion %2d elapsed %.2fs (budget %.0fs)\n", criterion,
                rep.elapsed_seconds, budget_seconds);
    CHECK(rep.elapsed_seconds < budget_seconds);
}

}  // namespace

TEST_CASE("criterion 1: Poisson reduction") { run(1, "poisson-reduction", 1.0); }
TEST_CASE("criterion 2: normalization") { run(2, "normalization", 5.0); }
TEST_CASE("criterion 3: Adomian exactness") { run(3, "adomian", 1.0); }
TEST_CASE("criterion 4: route equivalence") { run(4, "route-equivalence", 30.0); }
TEST_CASE("criterion 5: FPRF Monte Carlo") { run(5, "fprf-mc", 60.0); }
TEST_CASE("criterion 6: covariance consistency") { run(6, "covariance", 1.0); }
TEST_CASE("criterion 7: special-function identities") {
    run(7, "specfun-identities", 10.0);
}
TEST_CASE("criterion 8: GPP reductions") { run(8, "gpp-reductions", 5.0); }
TEST_CASE("criterion 9: linear motion") { run(9, "linear-motion", 120.0); }
TEST_CASE("criterion 10: planar motion") { run(10, "planar-motion", 180.0); }
TEST_CASE("criterion 11: fractional integral of the plain field") {
    run(11, "prf-integral", 120.0);
}
TEST_CASE("criterion 12: order statistics") { run(12, "order-stats", 60.0); }
TEST_CASE("criterion 13: compound fields") { run(13, "compound", 90.0); }
