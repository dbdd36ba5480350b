#include "crystal/e2_closed_form.hpp"

#include <algorithm>

namespace crystal {

namespace {

Int floor_div(Int num, Int den) {  // den > 0
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

Int ceil_div(Int num, Int den) { return -floor_div(-num, den); }

}  // namespace

E2Context make_e2(Int a0, Int a1) {
    E2Context ctx;
    ctx.weight = make_weight(2, IntVec{a0, a1});
    ctx.a0 = a0;
    ctx.a1 = a1;
    ctx.r = ctx.weight.level;
    ctx.b0 = a0 / 2;
    return ctx;
}

QU decompose(const E2Context& ctx, Int m) {
    const Int q = floor_div(add_ck(m, ctx.b0), ctx.r);
    const Int u = sub_ck(m, mul_ck(q, ctx.r));
    internal_check(-ctx.b0 <= u && u <= ctx.r - ctx.b0 - 1, "window position out of range");
    return QU{q, u};
}

Int s_closed(const E2Context& ctx, Int m, SVariant v) {
    const auto [q, u] = decompose(ctx, m);
    const Int base = std::max({-u, Int{0}, sub_ck(u, ctx.a1)});
    const Int cross = mul_ck(q, sub_ck(ctx.a1, mul_ck(2, u)));
    const Int quad = mul_ck(mul_ck(q, q), ctx.r);
    return v == SVariant::corrected ? add_ck(sub_ck(base, cross), quad)
                                    : add_ck(add_ck(base, cross), quad);
}

Int defect_closed(const E2Context& ctx, Int m) {
    const Int u = decompose(ctx, m).u;
    return std::max({mul_ck(-u, add_ck(ctx.a0, u)),
                     mul_ck(u, sub_ck(ctx.a1, u)),
                     mul_ck(sub_ck(u, ctx.a1), sub_ck(ctx.r, u))});
}

MaxRow closed_invariants(const E2Context& ctx, Int m, SVariant v) {
    MaxRow row;
    row.m = m;
    const auto [q, u] = decompose(ctx, m);
    row.q = q;
    row.u = u;
    row.s = s_closed(ctx, m, v);
    row.defect = defect_closed(ctx, m);
    row.degree = add_ck(mul_ck(2, row.s), m);
    row.hub.theta = IntVec{add_ck(ctx.a0, mul_ck(2, m)), sub_ck(ctx.a1, mul_ck(2, m))};
    row.content.c = IntVec{row.s, add_ck(row.s, m)};
    return row;
}

std::vector<MaxRow> max_weight_table(const E2Context& ctx, Int m_lo, Int m_hi, SVariant v) {
    if (m_lo > m_hi) throw std::invalid_argument("empty m range");
    std::vector<MaxRow> rows;
    rows.reserve(static_cast<std::size_t>(m_hi - m_lo + 1));
    for (Int m = m_lo; m <= m_hi; ++m) rows.push_back(closed_invariants(ctx, m, v));
    return rows;
}

CoarseBound coarse_bound(const E2Context& ctx, Int d) {
    if (d < 0) throw std::invalid_argument("bound needs d >= 0");
    CoarseBound out;
    out.d = d;
    out.q = ceil_div(add_ck(d, std::max(ctx.a0, ctx.a1)), mul_ck(2, ctx.r));
    out.value = add_ck(mul_ck(mul_ck(2, ctx.r), mul_ck(out.q, out.q)),
                       mul_ck(out.q, add_ck(ctx.r, ctx.a1)));
    return out;
}

CoarseCheck verify_coarse_bound(const E2Context& ctx, Int d, const CrystalGraph& g) {
    CoarseCheck out;
    out.value = coarse_bound(ctx, d).value;
    out.sharp = sharp_bound(ctx.weight, d).n;
    if (g.max_degree < out.value)
        throw CapTooLow("graph reaches degree " + std::to_string(g.max_degree) +
                        " but the coarse bound is " + std::to_string(out.value));
    for (const auto& [c, info] : g.vertices) {
        if (info.defect != d || info.degree < out.value) continue;
        if (*std::min_element(info.hub.theta.begin(), info.hub.theta.end()) > -d)
            out.violations.push_back(c);
    }
    out.pass = out.violations.empty() && out.value >= out.sharp;
    return out;
}

std::vector<VariantWitness> variant_audit(const E2Context& ctx, Int lo, Int hi, SVariant v) {
    std::vector<VariantWitness> out;
    for (Int m = lo; m <= hi; ++m) {
        const Int closed = s_closed(ctx, m, v);
        const Int oracle = max_weight_at(ctx.weight, LatticePoint{IntVec{m}}).s;
        if (closed != oracle) out.push_back(VariantWitness{m, closed, oracle});
    }
    return out;
}

}  // namespace crystal
