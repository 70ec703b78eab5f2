#include "doctest.h"
#include "urd/oracle.hpp"

using namespace urd;

namespace {

SearchLimits unlimited() {
    SearchLimits limits;
    limits.time_limit_secs.reset();
    return limits;
}

}  // namespace

TEST_CASE("oracle rederives the tiny spectra exactly") {
    OracleResult r3 = oracle_spectrum(3, unlimited());
    CHECK(r3.exhausted);
    CHECK(r3.points == admissible_spectrum(3).points);

    // v=6 is the first exceptional order: (0,2) must come back unrealizable.
    OracleResult r6 = oracle_spectrum(6, unlimited());
    CHECK(r6.exhausted);
    CHECK(r6.points == admissible_spectrum(6).points);

    OracleResult r9 = oracle_spectrum(9, unlimited());
    CHECK(r9.exhausted);
    CHECK(r9.points == admissible_spectrum(9).points);
}

TEST_CASE("a hopeless time budget reports exhausted=false, never lies") {
    // v=9 can finish before the deadline is ever consulted; v=12 cannot
    // (refuting (0,5) alone is far beyond a nanosecond).
    SearchLimits tiny;
    tiny.time_limit_secs = 1e-9;
    OracleResult res = oracle_spectrum(12, tiny);
    CHECK(!res.exhausted);
    // Whatever was decided before the deadline must still be correct.
    for (const SpectrumPoint& p : res.points) {
        CHECK(check_point(12, p.r, p.s) == Diagnosis::accept);
    }
}

TEST_CASE("argument guards") {
    CHECK_THROWS_AS(oracle_spectrum(2, unlimited()), InfeasibleError);
    CHECK_THROWS_AS(oracle_spectrum(10, unlimited()), InfeasibleError);
    CHECK_THROWS_AS(oracle_spectrum(-3, unlimited()), InfeasibleError);
    CHECK_THROWS_AS(oracle_spectrum(66, unlimited()), InfeasibleError);
}
