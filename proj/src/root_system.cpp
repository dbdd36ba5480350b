#include "crystal/root_system.hpp"

#include <cstddef>

namespace crystal {

std::string bracketed(const IntVec& v, char open, char close) {
    std::string out(1, open);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    out += close;
    return out;
}

RankData build_rank(Int e) {
    if (e < 2) throw InvalidRank("rank parameter e must be at least 2, got " + std::to_string(e));
    RankData rd;
    rd.e = e;
    rd.ell = e - 1;
    rd.cartan.assign(static_cast<std::size_t>(e), IntVec(static_cast<std::size_t>(e), 0));
    for (Int i = 0; i < e; ++i) {
        rd.cartan[i][i] = 2;
        // one decrement per cyclic neighbour direction; both directions hit
        // the same entry when e = 2
        rd.cartan[i][(i + 1) % e] -= 1;
        rd.cartan[i][(i + e - 1) % e] -= 1;
    }
    return rd;
}

HighestWeight make_weight(Int e, IntVec a) {
    HighestWeight w;
    w.rank = build_rank(e);
    if (static_cast<Int>(a.size()) != e)
        throw InvalidWeight("expected " + std::to_string(e) + " marks, got " +
                            std::to_string(a.size()));
    w.level = 0;
    for (Int ai : a) {
        if (ai < 0) throw InvalidWeight("negative mark in " + bracketed(a, '(', ')'));
        w.level = add_ck(w.level, ai);
    }
    if (w.level <= 0) throw InvalidWeight("level must be positive");
    w.a = std::move(a);
    return w;
}

static void check_content(const HighestWeight& w, const Content& c) {
    if (static_cast<Int>(c.c.size()) != w.rank.e)
        throw std::invalid_argument("content has " + std::to_string(c.c.size()) +
                                    " entries, expected " + std::to_string(w.rank.e));
}

static void check_residue(const HighestWeight& w, Int i) {
    if (i < 0 || i >= w.rank.e)
        throw std::invalid_argument("residue " + std::to_string(i) + " out of range");
}

Hub hub_of(const HighestWeight& w, const Content& c) {
    check_content(w, c);
    const Int e = w.rank.e;
    Hub h;
    h.theta.resize(static_cast<std::size_t>(e));
    for (Int i = 0; i < e; ++i) {
        Int acc = w.a[i];
        for (Int j = 0; j < e; ++j)
            acc = sub_ck(acc, mul_ck(w.rank.cartan[i][j], c.c[j]));
        h.theta[i] = acc;
    }
    return h;
}

Int defect_of(const HighestWeight& w, const Content& c) {
    check_content(w, c);
    const Int e = w.rank.e;
    Int lin = 0, quad = 0;
    for (Int i = 0; i < e; ++i) {
        lin = add_ck(lin, mul_ck(w.a[i], c.c[i]));
        for (Int j = 0; j < e; ++j)
            quad = add_ck(quad, mul_ck(w.rank.cartan[i][j], mul_ck(c.c[i], c.c[j])));
    }
    internal_check(quad % 2 == 0, "c^T C c must be even");
    return sub_ck(lin, quad / 2);
}

Int degree_of(const Content& c) {
    Int d = 0;
    for (Int ci : c.c) d = add_ck(d, ci);
    return d;
}

Content reflect(const HighestWeight& w, const Content& c, Int i) {
    check_content(w, c);
    check_residue(w, i);
    Hub h = hub_of(w, c);
    Content out = c;
    out.c[i] = add_ck(out.c[i], h.theta[i]);
    return out;
}

Content translate(const HighestWeight& w, const Content& c, const IntVec& k) {
    check_content(w, c);
    const Int e = w.rank.e;
    if (static_cast<Int>(k.size()) != w.rank.ell)
        throw std::invalid_argument("translation coordinate has wrong length");
    IntVec kt(static_cast<std::size_t>(e), 0);  // padded: kt = (0, k_1, ..., k_{e-1})
    for (Int i = 1; i < e; ++i) kt[i] = k[i - 1];

    Hub h = hub_of(w, c);
    Int quad = 0, lint = 0;
    for (Int i = 0; i < e; ++i) {
        lint = add_ck(lint, mul_ck(h.theta[i], kt[i]));
        for (Int j = 0; j < e; ++j)
            quad = add_ck(quad, mul_ck(w.rank.cartan[i][j], mul_ck(kt[i], kt[j])));
    }
    internal_check(quad % 2 == 0, "k^T C k must be even");
    // delta-shift landing the translate back among the module's weights
    Int s_delta = add_ck(lint, mul_ck(quad / 2, w.level));

    Content out = c;
    for (Int i = 0; i < e; ++i)
        out.c[i] = add_ck(sub_ck(out.c[i], mul_ck(w.level, kt[i])), s_delta);
    return out;
}

Content add_delta(const Content& c, Int k) {
    Content out = c;
    for (Int& ci : out.c) ci = add_ck(ci, k);
    return out;
}

}  // namespace crystal
