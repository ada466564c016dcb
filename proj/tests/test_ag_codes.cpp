#include <doctest.h>

#include <random>

#include "cliffdef/ag_codes.hpp"
#include "cliffdef/clifford.hpp"
#include "cliffdef/semigroup.hpp"

using cliffdef::CodeBoundReport;
using cliffdef::HalfInt;
using cliffdef::NumericalSemigroup;

namespace {
NumericalSemigroup S(std::vector<std::int64_t> gens) {
    return NumericalSemigroup::from_generators(std::move(gens));
}
}  // namespace

TEST_CASE("bound report point values") {
    NumericalSemigroup s = S({3, 5});  // g = 4, s(Q) = 1
    CodeBoundReport r4 = cliffdef::bound_report(s, 4);
    CHECK(r4.rr_raw == 1);
    CHECK(r4.clifford_bound == 2);
    CHECK(r4.exact_dimension == 2);
    CHECK(r4.winner == CodeBoundReport::Winner::Clifford);

    CodeBoundReport r6 = cliffdef::bound_report(s, 6);
    CHECK(r6.rr_raw == 3);
    CHECK(r6.clifford_bound == 3);
    CHECK(r6.exact_dimension == 4);
    CHECK(r6.winner == CodeBoundReport::Winner::Tie);

    CodeBoundReport rn = cliffdef::bound_report(S({1}), 0);
    CHECK(rn.rr_raw == 1);
    CHECK(rn.clifford_bound == 1);
    CHECK(rn.exact_dimension == 1);
    CHECK(rn.winner == CodeBoundReport::Winner::Tie);

    CHECK_THROWS_AS(cliffdef::bound_report(s, -1), cliffdef::InvalidInput);
}

TEST_CASE("clifford wins interval") {
    NumericalSemigroup s = S({3, 5});  // g = 4, s(Q) = 1: interval [0, 4]
    CodeBoundReport r = cliffdef::bound_report(s, 4);
    REQUIRE(r.clifford_wins_interval.has_value());
    CHECK(r.clifford_wins_interval->first == 0);
    CHECK(r.clifford_wins_interval->second == 4);
    // Inside the interval the clifford raw bound is >= the rr raw bound.
    for (std::int64_t m = r.clifford_wins_interval->first;
         m <= r.clifford_wins_interval->second; ++m) {
        CodeBoundReport rm = cliffdef::bound_report(s, m);
        CHECK(rm.clifford_raw >= HalfInt::from_int(rm.rr_raw));
    }
}

TEST_CASE("ma capability") {
    NumericalSemigroup s = S({3, 5});
    CHECK(cliffdef::ma_capability(s, 5) == 1);
    CHECK(cliffdef::ma_capability(s, 2) == 0);
    CHECK(cliffdef::ma_capability(S({1}), 3) == 1);
    CHECK_THROWS_AS(cliffdef::ma_capability(s, 0), cliffdef::InvalidInput);
    CHECK(cliffdef::ma_capability_raw(s, 2) == HalfInt::from_int(0));
}

TEST_CASE("bounds never exceed the exact dimension") {
    std::mt19937_64 rng(0xC0DE);
    std::uniform_int_distribution<std::int64_t> pick(2, 50);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::int64_t> gens{pick(rng), pick(rng), pick(rng)};
        std::int64_t d = std::gcd(std::gcd(gens[0], gens[1]), gens[2]);
        if (d != 1) gens.push_back(d + 1);
        NumericalSemigroup s = S(gens);
        for (std::int64_t m = 0; m <= s.conductor(); ++m) {
            CodeBoundReport r = cliffdef::bound_report(s, m);
            REQUIRE(r.exact_dimension >= r.rr_raw);
            REQUIRE(2 * r.exact_dimension >= r.clifford_raw.twice);
            REQUIRE(r.exact_dimension >= r.rr_bound);
        }
    }
}
