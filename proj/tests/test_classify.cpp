#include "doctest.h"
#include "oracles.hpp"

#include "nsg/classify.hpp"

using namespace nsg;

TEST_SUITE_BEGIN("classify");

TEST_CASE("symmetry") {
    CHECK(is_symmetric(NumericalSemigroup::parse("5,6,9")));
    CHECK_FALSE(is_symmetric(NumericalSemigroup::parse("4,5,7")));
    CHECK(is_symmetric(NumericalSemigroup::parse("2,3")));
    CHECK(is_symmetric(NumericalSemigroup::parse("5,8,12")));
    CHECK_FALSE(is_symmetric(NumericalSemigroup::parse("4,7,9")));
    CHECK_THROWS_AS(is_symmetric(NumericalSemigroup::parse("1")), RequiresProperSemigroup);
}

TEST_CASE("purity and M-purity") {
    {
        const Purity p = purity(NumericalSemigroup::parse("5,6,9"));
        CHECK(p.pure);
        CHECK_FALSE(p.m_pure);
    }
    {
        const Purity p = purity(NumericalSemigroup::parse("10,17,35"));
        CHECK(p.pure);
        CHECK(p.m_pure);
    }
    CHECK_FALSE(purity(NumericalSemigroup::parse("4,5,11")).m_pure);
    CHECK(purity(NumericalSemigroup::parse("5,6,13")).m_pure);
}

TEST_CASE("M-additivity") {
    CHECK(is_m_additive(NumericalSemigroup::parse("4,5,7")));
    CHECK_FALSE(is_m_additive(NumericalSemigroup::parse("7,8,9,19")));
    CHECK_FALSE(is_m_additive(NumericalSemigroup::parse("6,7,15")));
    CHECK(is_m_additive(NumericalSemigroup::parse("5,6,9")));
    CHECK_FALSE(is_m_additive(NumericalSemigroup::parse("4,5,11")));
}

TEST_CASE("M-additivity via the normalized Apery window when a_2 = a_1 + 1") {
    for (const char* gens : {"4,5,7", "4,5,11", "5,6,9", "5,6,13", "5,6,14", "6,7,15",
                             "7,8,20", "2,3", "6,7,10,11"}) {
        NumericalSemigroup s = NumericalSemigroup::parse(gens);
        REQUIRE(s.generators()[1] == s.multiplicity() + 1);
        CHECK(is_m_additive(s) == m_additive_by_apery_window(s));
    }
    CHECK_THROWS_AS(m_additive_by_apery_window(NumericalSemigroup::parse("4,7,9")),
                    InvalidArgument);
}

TEST_CASE("reduction numbers") {
    CHECK(reduction_number(NumericalSemigroup::parse("5,6,14")) == 4);
    CHECK(reduction_number(NumericalSemigroup::parse("6,7,15")) == 5);
    CHECK(reduction_number(NumericalSemigroup::parse("10,17,35")) == 5);
    CHECK(reduction_number(NumericalSemigroup::parse("7,8,9,19")) == 3);
    CHECK(reduction_number(NumericalSemigroup::parse("2,3")) == 1);
}

TEST_CASE("delta and gamma") {
    {
        const DeltaGamma dg = delta_gamma(NumericalSemigroup::parse("5,8,12"));
        CHECK(dg.delta == 2);
        CHECK(dg.gamma == 3);
    }
    {
        const DeltaGamma dg = delta_gamma(NumericalSemigroup::parse("4,7,9"));
        CHECK(dg.delta == 1);
        CHECK(dg.gamma == 1);
    }
    {
        const DeltaGamma dg = delta_gamma(NumericalSemigroup::parse("5,6,14"));
        CHECK(dg.delta == 1);
        CHECK(dg.gamma == 1);
    }
}

TEST_CASE("invariant reports") {
    {
        NumericalSemigroup s = NumericalSemigroup::parse("5,6,14");
        const InvariantReport& r = invariant_report(s);
        CHECK(r.delta == 1);
        CHECK(r.gamma == 1);
        CHECK(r.ord_conductor == 1);
        CHECK(r.tau == 2);
        CHECK(r.g_a1 == 3);
        CHECK(r.reduction_number == 4);
    }
    {
        NumericalSemigroup s = NumericalSemigroup::parse("10,17,35");
        const InvariantReport& r = invariant_report(s);
        CHECK(r.gr_gorenstein);
        CHECK(r.m_symmetric);
        CHECK(r.g_a1 == 5);
        CHECK(r.reduction_number == 5);
    }
    {
        NumericalSemigroup s = NumericalSemigroup::parse("5,8,12");
        const InvariantReport& r = invariant_report(s);
        CHECK(r.symmetric);
        CHECK_FALSE(r.gr_bar_gorenstein);
        CHECK(r.delta == 2);
        CHECK(r.gamma == 3);
        CHECK(r.tau == 3);
        CHECK(r.g_a1 == 3);
        CHECK(r.reduction_number == 3);
    }
    {
        // g(a_1) = r does not force M-additivity.
        NumericalSemigroup s = NumericalSemigroup::parse("7,8,9,19");
        const InvariantReport& r = invariant_report(s);
        CHECK(r.g_a1 == 3);
        CHECK(r.reduction_number == 3);
        CHECK_FALSE(r.m_additive);
    }
    {
        NumericalSemigroup s = NumericalSemigroup::parse("4,7,9");
        const InvariantReport& r = invariant_report(s);
        CHECK(r.delta == 1);
        CHECK(r.gamma == 1);
        CHECK(r.ord_conductor == 2);
        CHECK(r.tau == 2);
        CHECK(r.g_a1 == 2);
        CHECK(r.reduction_number == 2);
    }
    {
        NumericalSemigroup s = NumericalSemigroup::parse("6,7,15");
        const InvariantReport& r = invariant_report(s);
        CHECK(r.symmetric);
        CHECK(r.m_pure);
        CHECK_FALSE(r.m_additive);
        CHECK(r.gr_bar_gorenstein);
        CHECK_FALSE(r.gr_gorenstein);
        CHECK(r.g_a1 == 3);
        CHECK(r.reduction_number == 5);
    }
}

TEST_CASE("colon identity matches M-purity") {
    for (const char* gens : {"4,5,7", "5,6,9", "5,8,12", "10,17,35", "5,6,13", "3,4,5"}) {
        NumericalSemigroup s = NumericalSemigroup::parse(gens);
        CHECK(colon_identity_holds(s) == purity(s).m_pure);
    }
}

TEST_CASE("beta symmetry for M-pure symmetric semigroups") {
    const std::vector<Int> beta = invariant_report(NumericalSemigroup::parse("10,17,35")).beta;
    const Int g = static_cast<Int>(beta.size()) - 1;
    for (Int i = 0; i <= g; ++i) {
        CHECK(beta[static_cast<std::size_t>(i)] == beta[static_cast<std::size_t>(g - i)]);
    }
    // <5,8,12> is symmetric but not M-pure: beta = (1,2,1,1) is not palindromic.
    CHECK(invariant_report(NumericalSemigroup::parse("5,8,12")).beta ==
          std::vector<Int>{1, 2, 1, 1});
}

TEST_SUITE_END();
