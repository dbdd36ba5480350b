#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crystal/rational.hpp"
#include "crystal/root_system.hpp"

using namespace crystal;

namespace {

Content ct(IntVec v) { return Content{std::move(v)}; }

Content random_content(std::mt19937_64& rng, Int e, Int span) {
    IntVec v(static_cast<std::size_t>(e));
    for (Int& x : v) x = static_cast<Int>(rng() % (2 * span + 1)) - span;
    return Content{std::move(v)};
}

IntVec random_marks(std::mt19937_64& rng, Int e) {
    IntVec a(static_cast<std::size_t>(e));
    for (Int& x : a) x = static_cast<Int>(rng() % 4);
    if (std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; })) a[0] = 1;
    return a;
}

}  // namespace

TEST_CASE("pairing matrices") {
    auto r2 = build_rank(2);
    CHECK(r2.ell == 1);
    CHECK(r2.cartan == std::vector<IntVec>{{2, -2}, {-2, 2}});

    auto r3 = build_rank(3);
    CHECK(r3.cartan == std::vector<IntVec>{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});

    auto r5 = build_rank(5);
    CHECK(r5.cartan[0] == IntVec{2, -1, 0, 0, -1});
    CHECK(r5.cartan[2] == IntVec{0, -1, 2, -1, 0});

    for (Int e = 2; e <= 6; ++e) {
        auto rd = build_rank(e);
        for (Int i = 0; i < e; ++i) {
            Int row_sum = 0;
            CHECK(rd.cartan[i][i] == 2);
            for (Int j = 0; j < e; ++j) {
                CHECK(rd.cartan[i][j] == rd.cartan[j][i]);
                row_sum += rd.cartan[i][j];
            }
            CHECK(row_sum == 0);
        }
    }

    CHECK_THROWS_AS(build_rank(1), InvalidRank);
    CHECK_THROWS_AS(build_rank(0), InvalidRank);
}

TEST_CASE("weight validation") {
    auto w = make_weight(2, {2, 1});
    CHECK(w.level == 3);
    CHECK_THROWS_AS(make_weight(2, {-1, 2}), InvalidWeight);
    CHECK_THROWS_AS(make_weight(2, {0, 0}), InvalidWeight);
    CHECK_THROWS_AS(make_weight(3, {1, 1}), InvalidWeight);  // wrong arity
}

TEST_CASE("hub values") {
    auto w = make_weight(2, {2, 1});
    CHECK(hub_of(w, ct({0, 0})).theta == IntVec{2, 1});
    CHECK(hub_of(w, ct({2, 0})).theta == IntVec{-2, 5});
    CHECK(hub_of(w, ct({1, 0})).theta == IntVec{0, 3});
    CHECK(hub_of(w, ct({1, 3})).theta == IntVec{6, -3});
    CHECK(hub_of(w, ct({7, 3})).theta == IntVec{-6, 9});

    auto w3 = make_weight(3, {1, 1, 1});
    CHECK(hub_of(w3, ct({0, 0, 0})).theta == IntVec{1, 1, 1});
    CHECK(hub_of(w3, ct({1, 0, 0})).theta == IntVec{-1, 2, 2});
}

TEST_CASE("hub entries sum to the level") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        Int e = 2 + static_cast<Int>(rng() % 5);
        auto w = make_weight(e, random_marks(rng, e));
        auto h = hub_of(w, random_content(rng, e, 6));
        Int sum = 0;
        for (Int t : h.theta) sum += t;
        CHECK(sum == w.level);
    }
}

TEST_CASE("defect values") {
    auto w = make_weight(2, {2, 1});
    CHECK(defect_of(w, ct({0, 0})) == 0);
    CHECK(defect_of(w, ct({1, 0})) == 1);
    CHECK(defect_of(w, ct({4, 1})) == 0);
    CHECK(defect_of(w, ct({2, 1})) == 4);
    CHECK(defect_of(w, ct({10, 15})) == 10);
    CHECK(defect_of(w, ct({10, 16})) == 0);
    CHECK(degree_of(ct({10, 15})) == 25);
}

TEST_CASE("reflection") {
    auto w = make_weight(2, {2, 1});

    // theta_1((1,0)) = 3, so reflecting at 1 adds 3 to c_1
    Content c = ct({1, 0});
    Content rc = reflect(w, c, 1);
    CHECK(rc == ct({1, 3}));
    CHECK(hub_of(w, rc).theta == IntVec{6, -3});
    CHECK(defect_of(w, rc) == 1);
    CHECK(reflect(w, rc, 1) == c);  // involution

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        Int e = 2 + static_cast<Int>(rng() % 5);
        auto wr = make_weight(e, random_marks(rng, e));
        Content x = random_content(rng, e, 6);
        Int i = static_cast<Int>(rng() % e);
        Content y = reflect(wr, x, i);
        CHECK(reflect(wr, y, i) == x);
        CHECK(defect_of(wr, y) == defect_of(wr, x));
        // hub transforms by theta_j -> theta_j - theta_i * C_ij
        auto hx = hub_of(wr, x).theta;
        auto hy = hub_of(wr, y).theta;
        for (Int j = 0; j < e; ++j)
            CHECK(hy[j] == hx[j] - hx[i] * wr.rank.cartan[i][j]);
    }
}

TEST_CASE("translation") {
    auto w = make_weight(2, {2, 1});

    // from the m=-1 max weight, one lattice step lands on the m=-4 one
    Content moved = translate(w, ct({1, 0}), IntVec{1});
    CHECK(moved == ct({7, 3}));
    CHECK(degree_of(moved) == 10);
    CHECK(defect_of(w, moved) == defect_of(w, ct({1, 0})));
    CHECK(translate(w, ct({1, 0}), IntVec{0}) == ct({1, 0}));

    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 200; ++rep) {
        Int e = 2 + static_cast<Int>(rng() % 4);
        auto wr = make_weight(e, random_marks(rng, e));
        Content x = random_content(rng, e, 5);
        IntVec k(static_cast<std::size_t>(e - 1));
        for (Int& ki : k) ki = static_cast<Int>(rng() % 7) - 3;
        Content y = translate(wr, x, k);
        CHECK(defect_of(wr, y) == defect_of(wr, x));
        // hub moves by level * C k~ (k~ is k with a leading zero)
        IntVec kt(static_cast<std::size_t>(e), 0);
        for (Int i = 1; i < e; ++i) kt[i] = k[i - 1];
        auto hx = hub_of(wr, x).theta;
        auto hy = hub_of(wr, y).theta;
        for (Int i = 0; i < e; ++i) {
            Int ck = 0;
            for (Int j = 0; j < e; ++j) ck += wr.rank.cartan[i][j] * kt[j];
            CHECK(hy[i] == hx[i] + wr.level * ck);
        }
    }
}

TEST_CASE("delta shifts") {
    auto w = make_weight(2, {2, 1});
    Content c = ct({1, 0});
    Content shifted = add_delta(c, 2);
    CHECK(shifted == ct({3, 2}));
    CHECK(degree_of(shifted) == degree_of(c) + 2 * 2);
    CHECK(defect_of(w, shifted) == defect_of(w, c) + 2 * w.level);
    CHECK(hub_of(w, shifted) == hub_of(w, c));
    CHECK(add_delta(shifted, -2) == c);
}

TEST_CASE("defect is quadratic along residue directions") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 150; ++rep) {
        Int e = 2 + static_cast<Int>(rng() % 4);
        auto w = make_weight(e, random_marks(rng, e));
        Content c = random_content(rng, e, 5);
        Int i = static_cast<Int>(rng() % e);
        const Int t = hub_of(w, c).theta[i];
        const Int def = defect_of(w, c);
        for (Int k = -2; k <= (t < 0 ? 2 : t + 2); ++k) {
            Content ck = c;
            ck.c[i] += k;
            CHECK(defect_of(w, ck) == def + k * (t - k));
        }
    }
    // chains off the highest weight itself: profile k(a_i - k)
    auto w = make_weight(2, {2, 1});
    for (Int k = 0; k <= 2; ++k)
        CHECK(defect_of(w, ct({k, 0})) == k * (2 - k));
}

TEST_CASE("overflow fails loudly") {
    auto w = make_weight(2, {2, 1});
    const Int big = Int{1} << 62;
    CHECK_THROWS_AS(defect_of(w, ct({big, big})), OverflowError);
    CHECK_THROWS_AS(mul_ck(big, 4), OverflowError);
    CHECK_THROWS_AS(add_ck(big, big), OverflowError);
}

TEST_CASE("exact rationals") {
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(7, 2) * Rat(2, 7) == Rat(1));
    CHECK(rat_floor(Rat(-5, 2)) == -3);
    CHECK(rat_ceil(Rat(-5, 2)) == -2);
    CHECK(rat_floor(Rat(5, 2)) == 2);
    CHECK(rat_ceil(Rat(4, 2)) == 2);

    std::vector<std::vector<Rat>> A{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}};
    std::vector<Rat> x;
    CHECK(solve_linear(A, {Rat(1), Rat(4)}, x));
    CHECK(x == std::vector<Rat>{Rat(2), Rat(3)});

    std::vector<std::vector<Rat>> singular{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_FALSE(solve_linear(singular, {Rat(1), Rat(2)}, x));
}
