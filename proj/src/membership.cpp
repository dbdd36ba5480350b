#include "crystal/membership.hpp"

#include <algorithm>

namespace crystal {

namespace {

// Reduction core shared by dominant_rep and is_weight: repeatedly reflect at
// the smallest residue with theta < 0, maintaining the hub incrementally
// (O(e) per step instead of a fresh O(e^2) pairing).
void reduce_core(const HighestWeight& w, IntVec& c, IntVec& theta, IntVec* word,
                 std::size_t cap) {
    const Int e = w.rank.e;
    std::size_t steps = 0;
    for (;;) {
        Int pick = -1;
        for (Int i = 0; i < e; ++i) {
            if (theta[i] < 0) { pick = i; break; }
        }
        if (pick < 0) return;
        if (steps >= cap)
            throw IterationLimitExceeded("dominance reduction exceeded " +
                                         std::to_string(cap) + " reflections");
        const Int t = theta[pick];
        c[pick] = add_ck(c[pick], t);
        for (Int j = 0; j < e; ++j)
            theta[j] = sub_ck(theta[j], mul_ck(t, w.rank.cartan[pick][j]));
        if (word) word->push_back(pick);
        ++steps;
    }
}

}  // namespace

DominantResult dominant_rep(const HighestWeight& w, Content c, std::size_t cap) {
    DominantResult out;
    IntVec theta = hub_of(w, c).theta;
    reduce_core(w, c.c, theta, &out.word, cap);
    out.rep = std::move(c);
    return out;
}

bool is_weight(const HighestWeight& w, const Content& c) {
    if (defect_of(w, c) < 0) return false;
    IntVec cc = c.c;
    IntVec theta = hub_of(w, c).theta;
    reduce_core(w, cc, theta, nullptr, kReflectionCap);
    return std::all_of(cc.begin(), cc.end(), [](Int x) { return x >= 0; });
}

bool is_max_weight(const HighestWeight& w, const Content& c) {
    return is_weight(w, c) && !is_weight(w, add_delta(c, -1));
}

Hub hub_at_lattice(const HighestWeight& w, const LatticePoint& m) {
    const Int e = w.rank.e;
    if (static_cast<Int>(m.m.size()) != w.rank.ell)
        throw std::invalid_argument("lattice point has wrong length");
    IntVec mt(static_cast<std::size_t>(e), 0);
    for (Int i = 1; i < e; ++i) mt[i] = m.m[i - 1];
    Hub h;
    h.theta.resize(static_cast<std::size_t>(e));
    for (Int i = 0; i < e; ++i) {
        Int acc = w.a[i];
        acc = add_ck(acc, mt[(i + e - 1) % e]);
        acc = add_ck(acc, mt[(i + 1) % e]);
        acc = sub_ck(acc, mul_ck(2, mt[i]));
        h.theta[i] = acc;
    }
    return h;
}

MaxWeight max_weight_at(const HighestWeight& w, const LatticePoint& m, Int s_cap) {
    const Int e = w.rank.e;
    if (static_cast<Int>(m.m.size()) != w.rank.ell)
        throw std::invalid_argument("lattice point has wrong length");

    // content at shift s is (s, s+m_1, ..., s+m_{e-1}); entries must be
    // nonnegative for the dominant test to have any chance, so start there
    Int lo = 0, abs_sum = 0;
    for (Int mi : m.m) {
        lo = std::max(lo, -mi);
        abs_sum = add_ck(abs_sum, mi < 0 ? -mi : mi);
    }
    const Int guard = s_cap >= 0
                          ? s_cap
                          : mul_ck(w.level, mul_ck(add_ck(1, abs_sum), add_ck(1, abs_sum)));

    Content c;
    c.c.resize(static_cast<std::size_t>(e));
    for (Int s = lo;; ++s) {
        if (s > guard)
            throw SearchLimitExceeded("no max weight below shift " + std::to_string(guard) +
                                      " over m = " + bracketed(m.m, '(', ')'));
        c.c[0] = s;
        for (Int i = 1; i < e; ++i) c.c[i] = add_ck(s, m.m[i - 1]);
        if (is_weight(w, c)) return MaxWeight{m, s, c};
    }
}

std::optional<LatticePoint> lattice_from_hub(const HighestWeight& w, const Hub& target) {
    const Int e = w.rank.e;
    if (static_cast<Int>(target.theta.size()) != e)
        throw std::invalid_argument("hub has wrong length");
    Int sum = 0;
    for (Int t : target.theta) sum = add_ck(sum, t);
    if (sum != w.level)
        throw LevelMismatch("hub entries sum to " + std::to_string(sum) + ", level is " +
                            std::to_string(w.level));

    IntVec psi(static_cast<std::size_t>(e));
    Int weighted = 0;  // sum_j j * psi_j drives the mod-e obstruction
    for (Int j = 0; j < e; ++j) {
        psi[j] = sub_ck(w.a[j], target.theta[j]);
        weighted = add_ck(weighted, mul_ck(j, psi[j]));
    }
    if (((weighted % e) + e) % e != 0) return std::nullopt;

    // successive differences g_i = m_{i+1} - m_i satisfy g_{i-1} - g_i = psi_i
    // and sum to zero around the cycle, which pins g_0
    Int g = sub_ck(-psi[0], weighted / e);
    LatticePoint m;
    m.m.resize(static_cast<std::size_t>(w.rank.ell));
    Int acc = 0;
    for (Int i = 1; i < e; ++i) {
        acc = add_ck(acc, g);
        m.m[i - 1] = acc;
        g = sub_ck(g, psi[i]);
    }
    internal_check(hub_at_lattice(w, m).theta == target.theta,
                   "lattice solution must reproduce the target hub");
    return m;
}

Corner corner_weight(const HighestWeight& w, Int d, Int i) {
    const Int e = w.rank.e;
    if (d < 0) throw std::invalid_argument("corner needs d >= 0");
    if (i < 0 || i >= e) throw std::invalid_argument("residue out of range");

    IntVec theta(static_cast<std::size_t>(e), -(d + 1));
    theta[i] = add_ck(w.level, mul_ck(w.rank.ell, add_ck(d, 1)));

    Int weighted = 0;
    for (Int j = 0; j < e; ++j)
        weighted = add_ck(weighted, mul_ck(j, sub_ck(w.a[j], theta[j])));
    const Int obstruction = ((weighted % e) + e) % e;
    if (obstruction != 0) {
        // shift one alpha-unit from residue `obstruction` onto residue 0;
        // keeps the level and clears the congruence
        theta[obstruction] = add_ck(theta[obstruction], 1);
        theta[0] = sub_ck(theta[0], 1);
    }

    auto m = lattice_from_hub(w, Hub{theta});
    internal_check(m.has_value(), "repaired corner hub must be realizable");
    for (Int j = 0; j < e; ++j)
        internal_check(j == i || theta[j] <= -d, "corner hub must stay <= -d off the apex");
    return Corner{Hub{std::move(theta)}, *m};
}

}  // namespace crystal
