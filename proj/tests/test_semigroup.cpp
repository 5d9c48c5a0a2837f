#include <atomic>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"

#include "nsg/semigroup.hpp"

using namespace nsg;

TEST_SUITE_BEGIN("core");

TEST_CASE("construction from generators") {
    NumericalSemigroup s = NumericalSemigroup::from_generators({4, 5, 7});
    CHECK(s.multiplicity() == 4);
    CHECK(s.embedding_dim() == 3);
    CHECK(s.frobenius() == 6);
    CHECK(s.gaps() == std::vector<Int>{1, 2, 3, 6});
    CHECK(s.genus() == 4);

    NumericalSemigroup t = NumericalSemigroup::from_generators({2, 3});
    CHECK(t.multiplicity() == 2);
    CHECK(t.embedding_dim() == 2);
    CHECK(t.frobenius() == 1);
}

TEST_CASE("non-minimal inputs are reduced to the minimal generating set") {
    // Oracle: a generator is redundant iff it is a sum of two nonzero
    // elements of the closure of the full input.
    auto check_minimal = [](std::vector<Int> input) {
        NumericalSemigroup s = NumericalSemigroup::from_generators(
            std::span<const Int>(input.data(), input.size()));
        const Int bound = *std::max_element(input.begin(), input.end());
        const std::set<Int> closure = testing::closure_upto(input, bound);
        std::vector<Int> expected;
        for (Int g : input) {
            bool redundant = false;
            for (Int a : closure) {
                if (a == 0 || a >= g) continue;
                if (closure.count(g - a)) redundant = true;
            }
            if (!redundant) expected.push_back(g);
        }
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        CHECK(s.generators() == expected);
        return s.generators();
    };
    CHECK(check_minimal({6, 4, 5, 7, 8}) == std::vector<Int>{4, 5, 6, 7});
    CHECK(check_minimal({8, 4, 5, 7}) == std::vector<Int>{4, 5, 7});
    CHECK(check_minimal({2, 4, 7}) == std::vector<Int>{2, 7});
    CHECK(check_minimal({9, 12, 3, 7}) == std::vector<Int>{3, 7});
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({2, 4}), NotNumerical);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({6, 9, 21}), NotNumerical);
    // Pairwise gcds above 1 are fine as long as the full gcd is 1.
    CHECK(NumericalSemigroup::from_generators({6, 10, 15}).frobenius() == 29);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators(std::initializer_list<Int>{}),
                    EmptyGenerators);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), InvalidArgument);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({-2, 3}), InvalidArgument);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({Int{1} << 33, 3}), InvalidArgument);
    CHECK_THROWS_AS(
        NumericalSemigroup::from_generators({1, 5}, Properness::RequireProper),
        RequiresProperSemigroup);
    // N_0 itself is representable in the default mode.
    NumericalSemigroup n0 = NumericalSemigroup::from_generators({1});
    CHECK(n0.is_trivial());
    CHECK(n0.frobenius() == -1);
    CHECK_THROWS_AS(n0.t_set(), RequiresProperSemigroup);
}

TEST_CASE("parsing generator lists") {
    CHECK(NumericalSemigroup::parse("4,5,7").generators() == std::vector<Int>{4, 5, 7});
    CHECK(NumericalSemigroup::parse(" 10 , 17 ,35 ").generators() ==
          std::vector<Int>{10, 17, 35});
    CHECK_THROWS_AS(NumericalSemigroup::parse(""), EmptyGenerators);
    CHECK_THROWS_AS(NumericalSemigroup::parse("4,,5"), InvalidArgument);
    CHECK_THROWS_AS(NumericalSemigroup::parse("4,x"), InvalidArgument);
}

TEST_CASE("membership") {
    NumericalSemigroup s = NumericalSemigroup::parse("4,5,7");
    CHECK_FALSE(s.contains(6));
    CHECK(s.contains(0));
    CHECK_FALSE(s.contains(-3));
    for (Int n = 7; n < 40; ++n) CHECK(s.contains(n));

    NumericalSemigroup t = NumericalSemigroup::parse("5,6,9");
    CHECK_FALSE(t.contains(13));
    CHECK(t.contains(14));
}

TEST_CASE("apery sets") {
    NumericalSemigroup s = NumericalSemigroup::parse("5,6,9");
    CHECK(s.apery_set(5) == std::vector<Int>{0, 6, 9, 12, 18});

    NumericalSemigroup t = NumericalSemigroup::parse("4,5,7");
    // Independent scan oracle for the derived value.
    std::vector<Int> scanned;
    for (Int w = 0; w <= t.frobenius() + 4; ++w) {
        if (t.contains(w) && !t.contains(w - 4)) scanned.push_back(w);
    }
    CHECK(t.apery_set(4) == scanned);
    CHECK(t.apery_set(4) == std::vector<Int>{0, 5, 7, 10});

    NumericalSemigroup u = NumericalSemigroup::parse("10,17,35");
    CHECK(u.apery_set(10) ==
          std::vector<Int>{0, 17, 34, 35, 51, 52, 68, 69, 86, 103});

    CHECK_THROWS_AS(s.apery_set(0), InvalidArgument);
    CHECK_THROWS_AS(s.apery_set(-2), InvalidArgument);

    // |Ap(S;n)| = n with distinct residues, for members n.
    for (Int n : s.members_upto(20)) {
        if (n == 0) continue;
        const std::vector<Int> ap = s.apery_set(n);
        CHECK(static_cast<Int>(ap.size()) == n);
        std::set<Int> residues;
        for (Int w : ap) residues.insert(w % n);
        CHECK(static_cast<Int>(residues.size()) == n);
    }
}

TEST_CASE("apery orderings and the hat bijection") {
    NumericalSemigroup s = NumericalSemigroup::parse("4,5,7");
    const AperyTable& ap = s.apery();
    CHECK(ap.w == std::vector<Int>{0, 5, 7, 10});
    CHECK(ap.v == std::vector<Int>{0, 5, 10, 7});
    CHECK(ap.hat == std::vector<Int>{4, 1, 3, 2});

    NumericalSemigroup t = NumericalSemigroup::parse("2,3");
    CHECK(t.apery().w == std::vector<Int>{0, 3});
    CHECK(t.apery().v == std::vector<Int>{0, 3});
    CHECK(t.apery().hat == std::vector<Int>{2, 1});

    NumericalSemigroup u = NumericalSemigroup::parse("5,8,12");
    CHECK(u.apery().w == std::vector<Int>{0, 8, 12, 16, 24});
    CHECK(u.apery().v == std::vector<Int>{0, 16, 12, 8, 24});

    // hat is a bijection onto {1..e} and w_i = v_at(hat_i).
    for (const char* gens : {"4,5,7", "5,8,12", "10,17,35", "7,8,9,19"}) {
        NumericalSemigroup x = NumericalSemigroup::parse(gens);
        const AperyTable& t2 = x.apery();
        std::set<Int> hats(t2.hat.begin(), t2.hat.end());
        CHECK(static_cast<Int>(hats.size()) == x.multiplicity());
        CHECK(*hats.begin() == 1);
        CHECK(*hats.rbegin() == x.multiplicity());
        for (std::size_t i = 0; i < t2.w.size(); ++i) {
            CHECK(t2.w[i] == t2.v_at(t2.hat[i]));
        }
    }
}

TEST_CASE("T set") {
    CHECK(NumericalSemigroup::parse("4,5,7").t_set() == std::vector<Int>{3, 6});
    CHECK(NumericalSemigroup::parse("5,6,9").t_set() == std::vector<Int>{13});
    // Symmetric semigroups have T = {f}.
    for (const char* gens : {"5,8,12", "2,3", "10,17,35", "6,7,15"}) {
        NumericalSemigroup s = NumericalSemigroup::parse(gens);
        CHECK(s.t_set() == std::vector<Int>{s.frobenius()});
    }
}

TEST_CASE("maximal and minimal Apery elements") {
    NumericalSemigroup s = NumericalSemigroup::parse("5,6,9");
    CHECK(s.max_min_apery(Relation::Plain).max_set == std::vector<Int>{18});
    CHECK(s.max_min_apery(Relation::M).max_set == std::vector<Int>{9, 18});
    CHECK(s.max_min_apery(Relation::Plain).min_set == std::vector<Int>{6, 9});

    CHECK(NumericalSemigroup::parse("4,5,11").max_min_apery(Relation::M).max_set ==
          std::vector<Int>{10, 11});

    NumericalSemigroup t = NumericalSemigroup::parse("2,3");
    CHECK(t.max_min_apery(Relation::Plain).min_set == std::vector<Int>{3});
    CHECK(t.max_min_apery(Relation::Plain).max_set == std::vector<Int>{3});
}

TEST_CASE("concurrent readers see one consistent table") {
    NumericalSemigroup s = NumericalSemigroup::parse("10,17,35");
    std::atomic<bool> ok{true};
    auto reader = [&] {
        for (Int n = 0; n < 3000; ++n) {
            const Int o = s.ord(n);
            if (s.contains(n) ? o < 0 : o != -1) ok = false;
        }
        if (s.apery().w.size() != 10) ok = false;
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < 4; ++i) pool.emplace_back(reader);
    for (auto& t : pool) t.join();
    CHECK(ok.load());
    CHECK(s.ord(103) == 5);
}

TEST_SUITE_END();
