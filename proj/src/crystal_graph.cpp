#include "crystal/crystal_graph.hpp"

#include <algorithm>
#include <set>

namespace crystal {

CrystalGraph enumerate_graph(const HighestWeight& w, Int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("degree cap must be nonnegative");
    const Int e = w.rank.e;

    CrystalGraph g;
    g.weight = w;
    g.max_degree = max_degree;

    auto record = [&](const Content& c) {
        VertexInfo info;
        info.hub = hub_of(w, c);
        info.defect = defect_of(w, c);
        info.degree = degree_of(c);
        g.vertices.emplace(c, std::move(info));
    };

    std::set<Content> shell;
    shell.insert(Content{IntVec(static_cast<std::size_t>(e), 0)});
    record(*shell.begin());

    for (Int n = 1; n <= max_degree; ++n) {
        std::set<Content> next;
        for (const Content& c : shell) {
            for (Int i = 0; i < e; ++i) {
                Content cand = c;
                cand.c[i] = add_ck(cand.c[i], 1);
                if (next.count(cand)) continue;
                if (is_weight(w, cand)) next.insert(std::move(cand));
            }
        }
        for (const Content& c : next) record(c);
        shell = std::move(next);
    }

    // adjacency is purely set-theoretic once the vertex set is fixed
    for (const auto& [c, info] : g.vertices) {
        for (Int i = 0; i < e; ++i) {
            Content down = c;
            down.c[i] += 1;
            if (g.vertices.count(down)) g.edges.emplace_back(c, i);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<Content> string_through(const CrystalGraph& g, const Content& c, Int i) {
    const HighestWeight& w = g.weight;
    if (i < 0 || i >= w.rank.e) throw std::invalid_argument("residue out of range");
    if (!g.vertices.count(c))
        throw VertexNotFound("content " + bracketed(c.c, '(', ')') +
                             " is not a vertex of the enumerated graph");

    // climb to the top of the chain, then descend collecting everything;
    // uses the membership test so the chain is not clipped by the cap
    Content top = c;
    for (;;) {
        Content up = top;
        up.c[i] -= 1;
        if (!is_weight(w, up)) break;
        top = std::move(up);
    }
    std::vector<Content> chain{top};
    for (;;) {
        Content down = chain.back();
        down.c[i] += 1;
        if (!is_weight(w, down)) break;
        chain.push_back(std::move(down));
    }

    // structural facts about residue chains, cheap enough to always assert:
    // the top hub entry is the chain length minus one, and reflection at i
    // swaps the ends
    const Int width = hub_of(w, chain.front()).theta[i];
    internal_check(width >= 0 && static_cast<std::size_t>(width) + 1 == chain.size(),
                   "chain length must equal the top hub entry plus one");
    internal_check(reflect(w, chain.front(), i) == chain.back(),
                   "reflection must map the chain top to its bottom");
    return chain;
}

bool is_external(const HighestWeight& w, const Content& c, Int i) {
    if (i < 0 || i >= w.rank.e) throw std::invalid_argument("residue out of range");
    if (!is_weight(w, c))
        throw NotAMember("content " + bracketed(c.c, '(', ')') + " is not a weight");
    const Int t = hub_of(w, c).theta[i];
    Content step = c;
    if (t > 0) {
        step.c[i] -= 1;  // must be the top of its chain
        return !is_weight(w, step);
    }
    if (t < 0) {
        step.c[i] += 1;  // must be the bottom
        return !is_weight(w, step);
    }
    return true;
}

CriterionReport check_externality_criterion(const CrystalGraph& g) {
    CriterionReport report;
    for (const auto& [c, info] : g.vertices) {
        for (Int i = 0; i < g.weight.rank.e; ++i) {
            const Int t = info.hub.theta[i];
            if (info.defect > (t < 0 ? -t : t)) continue;
            ++report.pairs_checked;
            if (!is_external(g.weight, c, i))
                report.violations.push_back(CriterionViolation{c, i});
        }
    }
    return report;
}

ReduceResult reduce_weight(const HighestWeight& w, Content c) {
    if (!is_weight(w, c))
        throw NotAMember("content " + bracketed(c.c, '(', ')') + " is not a weight");
    const Int d = defect_of(w, c);

    ReduceResult out;
    for (;;) {
        Hub h = hub_of(w, c);
        Int pick = -1, best = 0;
        for (Int i = 0; i < w.rank.e; ++i) {
            const Int t = h.theta[i];
            if (t < 0 && t <= -d && t < best) { best = t; pick = i; }
        }
        if (pick < 0) break;
        c.c[pick] = add_ck(c.c[pick], best);
        out.word.push_back(pick);
        if (out.word.size() > kReflectionCap)
            throw IterationLimitExceeded("reduction exceeded the reflection budget");
    }
    out.rep = std::move(c);
    return out;
}

}  // namespace crystal
