#include <cstdint>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"

#include "nsg/goto_numbers.hpp"

using namespace nsg;

TEST_SUITE_BEGIN("goto");

TEST_CASE("A(u)") {
    NumericalSemigroup s = NumericalSemigroup::parse("4,5,7");
    CHECK(a_set(s, 4) == std::vector<Int>{4});
    CHECK(a_set(s, 7) == testing::direct_a_set(s, 7));
    CHECK(a_set(s, 7) == std::vector<Int>{2, 3});
    CHECK(a_set(s, 11) == std::vector<Int>{1, 2, 3, 4}); // u = f + a_1 + 1
    CHECK_THROWS_AS(a_set(s, 6), NotAMember);
    CHECK_THROWS_AS(a_set(s, 0), NotAMember);
    CHECK_THROWS_AS(a_set(s, -4), NotAMember);

    for (const char* gens : {"5,6,9", "10,17,35", "7,8,9,19"}) {
        NumericalSemigroup t = NumericalSemigroup::parse(gens);
        for (Int u : t.members_upto(t.frobenius() + 2 * t.multiplicity())) {
            if (u == 0) continue;
            CHECK(a_set(t, u) == testing::direct_a_set(t, u));
        }
    }
}

TEST_CASE("Goto vectors") {
    {
        NumericalSemigroup s = NumericalSemigroup::parse("4,5,7");
        const GotoVector& gv = goto_vector(s);
        CHECK(gv.sigma == std::vector<Int>{1, 2, 2, 2});
        CHECK(gv.tau == 1);
        CHECK(gv.rho == 2);
    }
    {
        NumericalSemigroup s = NumericalSemigroup::parse("5,6,9");
        const GotoVector& gv = goto_vector(s);
        CHECK(gv.sigma == std::vector<Int>{2, 3, 3, 3, 3});
        CHECK(gv.tau == 2);
    }
    // Symmetric: gv(S) = (ord(f+1), ..., ord(f+a_1)).
    for (const char* gens : {"5,8,12", "10,17,35", "6,7,15", "2,3"}) {
        NumericalSemigroup s = NumericalSemigroup::parse(gens);
        const GotoVector& gv = goto_vector(s);
        for (Int alpha = 1; alpha <= s.multiplicity(); ++alpha) {
            CHECK(gv.sigma_at(alpha) == s.ord(s.frobenius() + alpha));
        }
    }
}

TEST_CASE("Goto numbers") {
    NumericalSemigroup s = NumericalSemigroup::parse("4,5,7");
    CHECK(goto_number(s, 7) == 2);
    CHECK(goto_number(s, 4) == 2);
    CHECK(goto_number(s, 5) == 1);
    CHECK(goto_number(s, 9) == 1);

    NumericalSemigroup t = NumericalSemigroup::parse("5,6,9");
    CHECK(goto_number(t, 14) == 3);
    CHECK(goto_number(t, 11) == 2);
    CHECK(goto_number(t, 5) == 3);
    CHECK(goto_number(t, 9) == 3);
    CHECK(goto_number(t, 6) == 2);
    CHECK_THROWS_AS(goto_number(t, 13), NotAMember);
}

TEST_CASE("brute-force oracle") {
    CHECK(goto_number_oracle(NumericalSemigroup::parse("4,5,7"), 4) == 2);
    CHECK(goto_number_oracle(NumericalSemigroup::parse("2,3"), 3) == 1);
    CHECK(goto_number_oracle(NumericalSemigroup::parse("5,8,12"), 5) == 3);
}

TEST_CASE("oracle equals the Goto-vector computation on a small corpus") {
    for (const char* gens :
         {"4,5,7", "5,6,9", "5,8,12", "4,7,9", "5,6,14", "7,8,9,19", "6,7,15", "3,5",
          "6,7,10,11", "7,11,20"}) {
        NumericalSemigroup s = NumericalSemigroup::parse(gens);
        for (Int u : s.members_upto(s.frobenius() + 2 * s.multiplicity() + 1)) {
            if (u == 0) continue;
            CAPTURE(gens);
            CAPTURE(u);
            CHECK(goto_number(s, u) == goto_number_oracle(s, u));
        }
    }
}

TEST_CASE("bounds bracket the Goto numbers") {
    {
        // The global lower bound ceil(f/a_nu) = 2 is not sharp here: tau = 3.
        NumericalSemigroup s = NumericalSemigroup::parse("5,8,12");
        CHECK((s.frobenius() + 12 - 1) / 12 == 2);
        CHECK(goto_vector(s).tau == 3);
    }
    {
        NumericalSemigroup s = NumericalSemigroup::parse("4,5,7");
        const GotoBounds b = goto_bounds(s, 4);
        REQUIRE(b.upper_at_a1.has_value());
        CHECK(*b.upper_at_a1 == 2); // floor((f+a_1)/a_2), attained by g(4) = 2
        CHECK(goto_number(s, 4) == 2);
    }
    {
        NumericalSemigroup s = NumericalSemigroup::parse("2,3");
        const GotoBounds b = goto_bounds(s, 3);
        CHECK(b.lower == 1);
        CHECK(goto_number(s, 3) == 1);
    }
    for (const char* gens : {"4,5,7", "5,6,9", "5,6,14", "7,8,9,19"}) {
        NumericalSemigroup s = NumericalSemigroup::parse(gens);
        for (Int u : s.members_upto(s.frobenius() + 2 * s.multiplicity() + 1)) {
            if (u == 0) continue;
            const GotoBounds b = goto_bounds(s, u);
            const Int g = goto_number(s, u);
            CHECK(b.lower <= g);
            CHECK(g <= b.upper);
        }
    }
}

TEST_CASE("randomized semigroups: vector computation equals the definition") {
    // Deterministic LCG so failures reproduce.
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&](Int lo, Int hi) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<Int>((state >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    };
    int built = 0;
    while (built < 40) {
        const Int count = next(2, 6);
        std::vector<Int> gens;
        for (Int i = 0; i < count; ++i) gens.push_back(next(2, 50));
        Int g = 0;
        for (Int a : gens) g = std::gcd(g, a);
        if (g != 1) continue;
        NumericalSemigroup s = NumericalSemigroup::from_generators(
            std::span<const Int>(gens.data(), gens.size()));
        if (s.is_trivial()) continue;
        ++built;
        CAPTURE(format_generators(s.generators()));
        const std::vector<Int> members =
            s.members_upto(s.frobenius() + 2 * s.multiplicity() + 1);
        // Sample a handful of elements; the full sweep lives in the harness.
        for (int k = 0; k < 6; ++k) {
            const Int u = members[static_cast<std::size_t>(
                next(1, static_cast<Int>(members.size()) - 1))];
            CAPTURE(u);
            CHECK(goto_number(s, u) == goto_number_oracle(s, u));
        }
    }
}

TEST_CASE("tau is reached beyond the conductor") {
    for (const char* gens : {"4,5,7", "5,6,9", "5,6,14", "10,17,35"}) {
        NumericalSemigroup s = NumericalSemigroup::parse(gens);
        const Int f = s.frobenius();
        const Int a1 = s.multiplicity();
        const GotoVector& gv = goto_vector(s);
        for (Int u = f + a1 + 1; u <= f + 2 * a1 + 2; ++u) {
            CHECK(goto_number(s, u) == gv.tau);
        }
        CHECK(gv.tau == std::min(goto_number(s, a1), goto_number(s, f + a1)));
    }
}

TEST_SUITE_END();
