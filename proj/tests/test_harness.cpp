#include "doctest.h"
#include "oracles.hpp"

#include "nsg/enumerate.hpp"
#include "nsg/verify.hpp"

using namespace nsg;

namespace {

std::vector<Int> counts_by_genus(Int genus_max) {
    EnumSpec spec;
    spec.genus_max = genus_max;
    std::vector<Int> counts(static_cast<std::size_t>(genus_max) + 1, 0);
    enumerate_semigroups(spec, [&](const NumericalSemigroup& s) {
        ++counts[static_cast<std::size_t>(s.genus())];
    });
    return counts;
}

} // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("counts per genus") {
    CHECK(counts_by_genus(4) == std::vector<Int>{1, 1, 2, 4, 7});
}

TEST_CASE("genus <= 2 gives exactly four semigroups, depth first") {
    EnumSpec spec;
    spec.genus_max = 2;
    const std::vector<std::vector<Int>> got = enumerate_generator_lists(spec);
    // Depth-first, children by ascending removed generator.
    const std::vector<std::vector<Int>> expected = {{1}, {2, 3}, {3, 4, 5}, {2, 5}};
    CHECK(got == expected);
}

TEST_CASE("tree enumeration matches the gap-set oracle") {
    for (Int g = 0; g <= 8; ++g) {
        EnumSpec spec;
        spec.genus_max = g;
        std::vector<std::vector<Int>> tree = enumerate_generator_lists(spec);
        std::sort(tree.begin(), tree.end());
        CHECK(tree == gap_set_oracle_by_genus(g));
    }
}

TEST_CASE("enumeration by multiplicity and Frobenius bound") {
    EnumSpec spec;
    spec.mode = EnumSpec::Mode::ByMultiplicityAndFrobenius;
    spec.multiplicity = 5;
    spec.frobenius_max = 19;
    spec.filter = "symmetric";
    const std::vector<std::vector<Int>> got = enumerate_generator_lists(spec);
    auto has = [&](std::vector<Int> gens) {
        return std::find(got.begin(), got.end(), gens) != got.end();
    };
    CHECK(has({5, 6, 9}));
    CHECK(has({5, 8, 12}));
    for (const auto& gens : got) {
        NumericalSemigroup s = NumericalSemigroup::from_generators(
            std::span<const Int>(gens.data(), gens.size()));
        CHECK(s.multiplicity() == 5);
        CHECK(s.frobenius() <= 19);
        CHECK(is_symmetric(s));
    }
}

TEST_CASE("the two enumeration modes agree on a shared window") {
    // Semigroups with f <= 11 are exactly those with genus <= 11 and f <= 11.
    EnumSpec by_f;
    by_f.mode = EnumSpec::Mode::ByMultiplicityAndFrobenius;
    by_f.frobenius_max = 11;
    std::vector<std::vector<Int>> a = enumerate_generator_lists(by_f);

    EnumSpec by_g;
    by_g.genus_max = 11;
    by_g.frobenius_max = 11;
    std::vector<std::vector<Int>> b = enumerate_generator_lists(by_g);

    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("filters") {
    EnumSpec spec;
    spec.genus_max = 6;
    spec.filter = "m_pure";
    Int count = 0;
    enumerate_semigroups(spec, [&](const NumericalSemigroup& s) {
        CHECK(purity(s).m_pure);
        ++count;
    });
    CHECK(count > 0);

    spec.filter = "m_additive";
    enumerate_semigroups(spec, [&](const NumericalSemigroup& s) {
        CHECK(is_m_additive(s));
    });
}

TEST_CASE("spec validation") {
    EnumSpec spec;
    CHECK_THROWS_AS(spec.validate(), InvalidSpec); // missing genus_max
    spec.genus_max = 200;
    CHECK_THROWS_AS(spec.validate(), InvalidSpec);
    spec.genus_max = 5;
    spec.filter = "bogus";
    CHECK_THROWS_AS(spec.validate(), InvalidSpec);
    spec.filter = "all";
    CHECK_NOTHROW(spec.validate());

    EnumSpec byf;
    byf.mode = EnumSpec::Mode::ByMultiplicityAndFrobenius;
    CHECK_THROWS_AS(byf.validate(), InvalidSpec); // missing frobenius_max
    byf.frobenius_max = 300;
    CHECK_THROWS_AS(byf.validate(), InvalidSpec);
}

TEST_CASE("verify dispatch") {
    CHECK_THROWS_AS(verify("no_such_property", EnumSpec{}), UnknownProperty);

    EnumSpec small;
    small.genus_max = 6;
    const VerificationReport r = verify("goto_differential", small, 2);
    CHECK(r.ok());
    CHECK(r.checked > 0);
    CHECK(r.witnesses.empty());

    const VerificationReport ex = verify("examples_8exs", EnumSpec{});
    CHECK(ex.ok());
    CHECK(ex.checked == 8);

    const VerificationReport q = verify("question_3lem", EnumSpec{});
    CHECK(q.ok());
    CHECK_FALSE(q.notes.empty());

    const VerificationReport shen = verify("tau_below_generators", EnumSpec{});
    CHECK(shen.ok());
    CHECK(shen.checked == 2);
}

TEST_CASE("Shen examples have tau below every generator Goto number") {
    for (const char* gens : {"7,11,20", "11,14,21"}) {
        NumericalSemigroup s = NumericalSemigroup::parse(gens);
        const GotoVector& gv = goto_vector(s);
        for (Int a : s.generators()) {
            CHECK(gv.tau < goto_number(s, a));
        }
    }
}

TEST_SUITE_END();
