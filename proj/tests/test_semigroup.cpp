#include <doctest.h>

#include <random>

#include "cliffdef/semigroup.hpp"
#include "oracle.hpp"

using cliffdef::NumericalSemigroup;

namespace {
NumericalSemigroup S(std::vector<std::int64_t> gens) {
    return NumericalSemigroup::from_generators(std::move(gens));
}
}  // namespace

TEST_CASE("construction and invariants for <3,5>") {
    NumericalSemigroup s = S({3, 5});
    CHECK(s.genus() == 4);
    CHECK(s.frobenius() == 7);
    CHECK(s.conductor() == 8);
    CHECK(s.multiplicity() == 3);
    CHECK(s.generators() == std::vector<std::int64_t>{3, 5});
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(S({}), cliffdef::InvalidInput);
    CHECK_THROWS_AS(S({0, 3}), cliffdef::InvalidInput);
    CHECK_THROWS_AS(S({2, 4}), cliffdef::NotNumerical);
    CHECK_THROWS_WITH_AS(S({2, 4}), "not a numerical semigroup (gcd 2)", cliffdef::NotNumerical);
    CHECK_THROWS_AS(S({6, 10}), cliffdef::NotNumerical);
    CHECK_NOTHROW(S({6, 10, 15}));
}

TEST_CASE("N edge case") {
    NumericalSemigroup n = S({1});
    CHECK(n.genus() == 0);
    CHECK(n.frobenius() == -1);
    CHECK(n.conductor() == 0);
    CHECK(n.multiplicity() == 1);
    CHECK(n.contains(0));
    CHECK(n.count_up_to(5) == 6);
    CHECK(n.is_symmetric());
    CHECK(n.apery_set(1) == std::vector<std::int64_t>{0});
}

TEST_CASE("contains") {
    NumericalSemigroup s = S({3, 5});
    CHECK_FALSE(s.contains(7));
    CHECK(s.contains(0));
    CHECK(s.contains(100));
    CHECK_FALSE(s.contains(-1));
}

TEST_CASE("count_up_to") {
    NumericalSemigroup s = S({3, 5});
    CHECK(s.count_up_to(7) == 4);  // 0,3,5,6
    CHECK(s.count_up_to(-1) == 0);
    CHECK(s.count_up_to(8) == 5);  // 0,3,5,6,8
}

TEST_CASE("apery sets") {
    NumericalSemigroup s = S({3, 5});
    CHECK(s.apery_set(3) == std::vector<std::int64_t>{0, 5, 10});
    CHECK(s.apery_set(5) == std::vector<std::int64_t>{0, 3, 6, 9, 12});
    CHECK_THROWS_AS(s.apery_set(4), cliffdef::InvalidInput);
    CHECK_THROWS_AS(s.apery_set(0), cliffdef::InvalidInput);
}

TEST_CASE("symmetry and sparseness") {
    CHECK(S({3, 5}).is_symmetric());
    CHECK_FALSE(S({3, 4, 5}).is_symmetric());
    CHECK(S({2, 5}).is_sparse());
    CHECK(S({3, 4, 5}).is_sparse());  // [0, c-1] = {0,1,2} has no members beyond 0
    CHECK_FALSE(S({4, 6, 9}).is_sparse());
}

TEST_CASE("phi") {
    NumericalSemigroup s = S({3, 5});
    CHECK(s.phi(3) == 4);
    CHECK(s.phi(0) == 7);
    CHECK(s.phi(7) == 0);
    CHECK_THROWS_AS(s.phi(8), cliffdef::InvalidInput);
    CHECK_THROWS_AS(s.phi(-1), cliffdef::InvalidInput);
    CHECK_THROWS_AS(S({1}).phi(0), cliffdef::InvalidInput);
}

TEST_CASE("maximal embedding dimension and derived semigroup") {
    CHECK(S({3, 4, 5}).has_max_embedding_dimension());
    CHECK(S({3, 4, 5}).derived_semigroup() == S({1}));
    CHECK_FALSE(S({3, 5}).has_max_embedding_dimension());
    CHECK_THROWS_AS(S({3, 5}).derived_semigroup(), cliffdef::NotMaxEmbedding);
    CHECK(S({3, 5, 7}).has_max_embedding_dimension());
    CHECK(S({3, 5, 7}).derived_semigroup() == S({2, 3}));
}

TEST_CASE("from_membership round trip and validation") {
    NumericalSemigroup s = S({4, 6, 9});
    std::vector<bool> bits;
    for (std::int64_t x = 0; x < s.conductor(); ++x) bits.push_back(s.contains(x));
    NumericalSemigroup t = NumericalSemigroup::from_membership(bits);
    CHECK(t == s);
    CHECK(t.generators() == s.generators());

    CHECK_THROWS_AS(NumericalSemigroup::from_membership({false, true}), cliffdef::InvalidInput);
    // Closure failure: 0 and 2 in, 4 = 2 + 2 out.
    CHECK_THROWS_AS(NumericalSemigroup::from_membership({true, false, true, false, false}),
                    cliffdef::NotNumerical);
}

TEST_CASE("random corpus agrees with the independent oracle") {
    std::mt19937_64 rng(0xC1FFDEFull);
    std::uniform_int_distribution<std::int64_t> pick(2, 60);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> gens;
        int k = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) gens.push_back(pick(rng));
        std::int64_t d = 0;
        for (std::int64_t g : gens) d = std::gcd(d, g);
        if (d != 1) gens.push_back(d + 1);
        oracle::Semigroup os = oracle::build(gens);
        NumericalSemigroup s = S(gens);
        REQUIRE(s.genus() == os.genus);
        REQUIRE(s.frobenius() == os.frobenius);
        REQUIRE(s.conductor() == os.conductor);
        REQUIRE(s.multiplicity() == os.multiplicity);
        for (std::int64_t x = -2; x <= os.conductor + 2; ++x) {
            REQUIRE(s.contains(x) == oracle::contains(os, x));
            REQUIRE(s.count_up_to(x) == oracle::count_up_to(os, x));
        }
        // Apery set: m elements, one per residue, max = F + m.
        auto ap = s.apery_set(s.multiplicity());
        REQUIRE(static_cast<std::int64_t>(ap.size()) == s.multiplicity());
        std::vector<bool> seen(static_cast<std::size_t>(s.multiplicity()), false);
        for (std::int64_t w : ap) {
            REQUIRE(s.contains(w));
            REQUIRE_FALSE(s.contains(w - s.multiplicity()));
            seen[static_cast<std::size_t>(w % s.multiplicity())] = true;
        }
        for (bool b : seen) REQUIRE(b);
        REQUIRE(ap.back() == s.frobenius() + s.multiplicity());
        // MED reconstruction: S = (m + T) u {0}.
        if (s.has_max_embedding_dimension()) {
            NumericalSemigroup t = s.derived_semigroup();
            for (std::int64_t x = 0; x <= s.conductor() + 1; ++x) {
                bool expect = x == 0 || (x >= s.multiplicity() && t.contains(x - s.multiplicity()));
                REQUIRE(s.contains(x) == expect);
            }
        }
    }
}
