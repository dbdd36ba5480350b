#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crystal/membership.hpp"

using namespace crystal;

namespace {

Content ct(IntVec v) { return Content{std::move(v)}; }
LatticePoint lp(IntVec v) { return LatticePoint{std::move(v)}; }

}  // namespace

TEST_CASE("dominance reduction") {
    auto w = make_weight(2, {2, 1});

    // already dominant: no reflections
    auto r0 = dominant_rep(w, ct({1, 0}));
    CHECK(r0.rep == ct({1, 0}));
    CHECK(r0.word.empty());

    // theta((10,15)) = [12,-9]: reflect at 1, then 0, then 1
    auto r1 = dominant_rep(w, ct({10, 15}));
    CHECK(r1.rep == ct({4, 3}));
    CHECK(r1.word == IntVec{1, 0, 1});
    CHECK(defect_of(w, r1.rep) == defect_of(w, ct({10, 15})));
    // replaying the word reproduces the representative
    Content replay = ct({10, 15});
    for (Int i : r1.word) replay = reflect(w, replay, i);
    CHECK(replay == r1.rep);

    // the defect-0 neighbour one delta-step deeper reduces all the way
    auto r2 = dominant_rep(w, ct({10, 16}));
    CHECK(r2.rep == ct({0, 0}));
    CHECK(r2.word == IntVec{1, 0, 1, 0});

    CHECK_THROWS_AS(dominant_rep(w, ct({10, 15}), 1), IterationLimitExceeded);
}

TEST_CASE("membership") {
    auto w = make_weight(2, {2, 1});
    CHECK(is_weight(w, ct({0, 0})));
    CHECK(is_weight(w, ct({1, 3})));
    CHECK(is_weight(w, ct({10, 16})));
    CHECK(is_weight(w, ct({10, 15})));
    CHECK(is_weight(w, ct({1, 2})));         // dominant rep is (1,1)
    CHECK_FALSE(is_weight(w, ct({0, 2})));   // defect -2
    CHECK_FALSE(is_weight(w, ct({3, 0})));   // defect -3
    CHECK_FALSE(is_weight(w, ct({-1, 0})));

    // membership is reflection-invariant
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 300; ++rep) {
        Int e = 2 + static_cast<Int>(rng() % 3);
        IntVec a(static_cast<std::size_t>(e), 0);
        a[rng() % e] = 1 + static_cast<Int>(rng() % 2);
        auto wr = make_weight(e, a);
        IntVec v(static_cast<std::size_t>(e));
        for (Int& x : v) x = static_cast<Int>(rng() % 9) - 2;
        Content c{v};
        Int i = static_cast<Int>(rng() % e);
        CHECK(is_weight(wr, c) == is_weight(wr, reflect(wr, c, i)));
    }
}

TEST_CASE("max weights") {
    auto w = make_weight(2, {2, 1});
    CHECK(is_max_weight(w, ct({0, 0})));
    CHECK(is_max_weight(w, ct({2, 0})));
    CHECK(is_max_weight(w, ct({7, 3})));
    CHECK_FALSE(is_max_weight(w, ct({1, 1})));   // (0,0) is a weight
    CHECK_FALSE(is_max_weight(w, ct({0, 2})));   // not a weight at all
}

TEST_CASE("max weight over a lattice point") {
    auto w = make_weight(2, {2, 1});
    // the full tabulated strip m = -4..3
    const std::vector<std::tuple<Int, Int, IntVec>> strip = {
        {-4, 7, {-6, 9}}, {-3, 4, {-4, 7}}, {-2, 2, {-2, 5}}, {-1, 1, {0, 3}},
        {0, 0, {2, 1}},   {1, 0, {4, -1}},  {2, 1, {6, -3}},  {3, 2, {8, -5}},
    };
    for (const auto& [m, s, hub] : strip) {
        MaxWeight mw = max_weight_at(w, lp({m}));
        CHECK(mw.s == s);
        CHECK(mw.content == ct({s, s + m}));
        CHECK(hub_of(w, mw.content).theta == hub);
        CHECK(hub_at_lattice(w, lp({m})).theta == hub);
        CHECK(is_max_weight(w, mw.content));
    }
    // shifts below the found one are genuinely not weights
    CHECK_FALSE(is_weight(w, ct({6, 2})));
    CHECK_FALSE(is_weight(w, ct({5, 1})));
    CHECK_FALSE(is_weight(w, ct({4, 0})));

    auto w3 = make_weight(3, {1, 1, 1});
    MaxWeight mw3 = max_weight_at(w3, lp({1, 1}));
    CHECK(mw3.s == 0);
    CHECK(mw3.content == ct({0, 1, 1}));
    MaxWeight deep = max_weight_at(w3, lp({6, 6}));
    CHECK(deep.s == 8);
    CHECK(deep.content == ct({8, 14, 14}));
    CHECK(degree_of(deep.content) == 36);

    CHECK_THROWS_AS(max_weight_at(w, lp({2}), 0), SearchLimitExceeded);
}

TEST_CASE("max weight boxes") {
    // every lattice point of a small box yields a genuine max weight whose
    // hub matches the closed lattice form
    std::vector<HighestWeight> ws = {make_weight(2, {2, 1}), make_weight(3, {1, 1, 1}),
                                     make_weight(4, {1, 0, 1, 0})};
    for (const auto& w : ws) {
        const Int span = w.rank.e == 2 ? 8 : 3;
        const Int ell = w.rank.ell;
        IntVec m(static_cast<std::size_t>(ell), -span);
        for (;;) {
            MaxWeight mw = max_weight_at(w, lp(m));
            CHECK(is_max_weight(w, mw.content));
            CHECK(hub_of(w, mw.content) == hub_at_lattice(w, lp(m)));
            Int j = ell - 1;
            while (j >= 0 && m[j] == span) {
                m[j] = -span;
                --j;
            }
            if (j < 0) break;
            ++m[j];
        }
    }
}

TEST_CASE("lattice point from hub") {
    auto w = make_weight(2, {2, 1});
    auto m1 = lattice_from_hub(w, Hub{{4, -1}});
    REQUIRE(m1.has_value());
    CHECK(m1->m == IntVec{1});
    auto m0 = lattice_from_hub(w, Hub{{2, 1}});
    REQUIRE(m0.has_value());
    CHECK(m0->m == IntVec{0});

    auto w3 = make_weight(3, {1, 1, 1});
    auto m3 = lattice_from_hub(w3, Hub{{3, 0, 0}});
    REQUIRE(m3.has_value());
    CHECK(m3->m == IntVec{1, 1});

    // obstructed class: entries sum to the level but no lattice point fits
    CHECK_FALSE(lattice_from_hub(w3, Hub{{2, 1, 0}}).has_value());

    CHECK_THROWS_AS(lattice_from_hub(w, Hub{{4, 0}}), LevelMismatch);

    // round trip over random lattice points
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 200; ++rep) {
        Int e = 2 + static_cast<Int>(rng() % 3);
        IntVec a(static_cast<std::size_t>(e));
        for (Int& x : a) x = static_cast<Int>(rng() % 3);
        if (std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; })) a[0] = 1;
        auto wr = make_weight(e, a);
        IntVec m(static_cast<std::size_t>(e - 1));
        for (Int& x : m) x = static_cast<Int>(rng() % 13) - 6;
        auto back = lattice_from_hub(wr, hub_at_lattice(wr, lp(m)));
        REQUIRE(back.has_value());
        CHECK(back->m == m);
    }
}

TEST_CASE("corner weights") {
    auto w = make_weight(2, {2, 1});
    Corner c0 = corner_weight(w, 3, 0);
    CHECK(c0.hub.theta == IntVec{6, -3});
    CHECK(c0.m.m == IntVec{2});
    Corner c1 = corner_weight(w, 3, 1);
    CHECK(c1.hub.theta == IntVec{-4, 7});
    CHECK(c1.m.m == IntVec{-3});

    auto w3 = make_weight(3, {1, 1, 1});
    Corner c3 = corner_weight(w3, 3, 0);
    CHECK(c3.hub.theta == IntVec{11, -4, -4});
    CHECK(c3.m.m == IntVec{5, 5});

    // the defining properties, across ranks and defects
    for (Int e = 2; e <= 4; ++e) {
        IntVec a(static_cast<std::size_t>(e), 0);
        a[0] = 1;
        a[e - 1] = 2;
        auto wr = make_weight(e, a);
        for (Int d = 0; d <= 5; ++d) {
            for (Int i = 0; i < e; ++i) {
                Corner c = corner_weight(wr, d, i);
                CHECK(c.hub.theta[i] >= wr.level + wr.rank.ell * d);
                for (Int j = 0; j < e; ++j)
                    if (j != i) CHECK(c.hub.theta[j] <= -d);
                CHECK(hub_at_lattice(wr, c.m).theta == c.hub.theta);
            }
        }
    }
}

TEST_CASE("translation is compatible with the lattice") {
    // translating the max weight over m by k lands on the max-weight line
    // over m - level * k, delta-shifted to stay in the module
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 100; ++rep) {
        Int a0 = static_cast<Int>(rng() % 3), a1 = static_cast<Int>(rng() % 3);
        if (a0 + a1 == 0) a0 = 1;
        auto w = make_weight(2, {a0, a1});
        Int m = static_cast<Int>(rng() % 11) - 5;
        Int k = static_cast<Int>(rng() % 5) - 2;
        Content start = max_weight_at(w, lp({m})).content;
        Content moved = translate(w, start, IntVec{k});
        Content target = max_weight_at(w, lp({m - w.level * k})).content;
        // same delta-line: the difference must be a constant vector
        CHECK(moved.c[1] - moved.c[0] == target.c[1] - target.c[0]);
        Int shift = moved.c[0] - target.c[0];
        CHECK(shift >= 0);
        CHECK(moved == add_delta(target, shift));
    }
}

TEST_CASE("defect-zero weights reduce to the empty content") {
    auto w = make_weight(2, {2, 1});
    int seen = 0;
    for (Int x = -6; x <= 26; ++x)
        for (Int y = -6; y <= 26; ++y) {
            Content c{IntVec{x, y}};
            if (!is_weight(w, c) || defect_of(w, c) != 0) continue;
            ++seen;
            CHECK(dominant_rep(w, c).rep == ct({0, 0}));
        }
    CHECK(seen == 11);  // the Weyl orbit of the top weight inside the box
}
