#include "crystal/bounds.hpp"

#include <algorithm>

namespace crystal {

namespace {

Int min_theta(const Hub& h) {
    return *std::min_element(h.theta.begin(), h.theta.end());
}

Int min_abs_theta(const Hub& h) {
    Int best = h.theta[0] < 0 ? -h.theta[0] : h.theta[0];
    for (Int t : h.theta) best = std::min(best, t < 0 ? -t : t);
    return best;
}

bool settled(const Hub& h, Int d, Criterion crit) {
    return crit == Criterion::reduction ? min_theta(h) <= -d : min_abs_theta(h) >= d;
}

void require_rank_for(const HighestWeight& w, Criterion crit) {
    if (crit == Criterion::both_sides && w.rank.e != 2)
        throw InvalidRank("the both-sides criterion admits no finite bound above rank 2");
}

RegionPoint make_point(const HighestWeight& w, LatticePoint m, Hub h, bool boundary) {
    MaxWeight eta = max_weight_at(w, m);
    RegionPoint pt;
    pt.defect = defect_of(w, eta.content);
    pt.degree = degree_of(eta.content);
    pt.m = std::move(m);
    pt.eta = std::move(eta);
    pt.hub = std::move(h);
    pt.boundary = boundary;
    return pt;
}

}  // namespace

RegionReport region_points(const HighestWeight& w, Int d) {
    if (d < 0) throw std::invalid_argument("region needs d >= 0");
    const Int e = w.rank.e;
    const Int ell = w.rank.ell;

    RegionReport rep;
    rep.d = d;

    // Corner k of the simplex solves theta_i(x) = -d for all i != k.
    // With the gauge coordinate x_0 = 0, theta_i(x) = a_i - (C x)_i, so the
    // rows are sum_{j>=1} C[i][j] x_j = a_i + d.
    for (Int k = 0; k < e; ++k) {
        std::vector<std::vector<Rat>> A;
        std::vector<Rat> b;
        for (Int i = 0; i < e; ++i) {
            if (i == k) continue;
            std::vector<Rat> row(static_cast<std::size_t>(ell));
            for (Int j = 1; j < e; ++j) row[j - 1] = Rat(w.rank.cartan[i][j]);
            A.push_back(std::move(row));
            b.push_back(Rat(add_ck(w.a[i], d)));
        }
        std::vector<Rat> corner;
        if (!solve_linear(A, b, corner))
            throw DegenerateSimplex("corner system " + std::to_string(k) + " is singular");
        rep.simplex_corners.push_back(std::move(corner));
    }

    for (Int j = 0; j < ell; ++j) {
        Rat lo = rep.simplex_corners[0][j], hi = lo;
        for (const auto& corner : rep.simplex_corners) {
            if (corner[j] < lo) lo = corner[j];
            if (hi < corner[j]) hi = corner[j];
        }
        rep.bounding_box.emplace_back(rat_floor(lo), rat_ceil(hi));
    }

    // lexicographic sweep of the box
    rep.shell_reducible = true;
    LatticePoint m;
    m.m.resize(static_cast<std::size_t>(ell));
    for (Int j = 0; j < ell; ++j) m.m[j] = rep.bounding_box[j].first;
    for (;;) {
        bool on_shell = false;
        for (Int j = 0; j < ell; ++j)
            if (m.m[j] == rep.bounding_box[j].first || m.m[j] == rep.bounding_box[j].second)
                on_shell = true;

        Hub h = hub_at_lattice(w, m);
        const Int mn = min_theta(h);
        if (mn > -d && on_shell) rep.shell_reducible = false;
        if (mn >= -d) rep.points.push_back(make_point(w, m, std::move(h), mn == -d));

        Int j = ell - 1;
        while (j >= 0 && m.m[j] == rep.bounding_box[j].second) {
            m.m[j] = rep.bounding_box[j].first;
            --j;
        }
        if (j < 0) break;
        ++m.m[j];
    }
    return rep;
}

SharpBound sharp_bound(const HighestWeight& w, Int d, Criterion crit) {
    if (d < 0) throw std::invalid_argument("bound needs d >= 0");
    require_rank_for(w, crit);

    SharpBound out;
    out.d = d;
    if (d == 0) return out;  // the zero stratum is settled from degree 0 on

    std::vector<RegionPoint> failing;
    if (crit == Criterion::reduction) {
        RegionReport rep = region_points(w, d);
        internal_check(rep.shell_reducible, "region sweep must not clip failing points");
        for (auto& pt : rep.points)
            if (!pt.boundary) failing.push_back(std::move(pt));
    } else {
        // rank 2: the failing set is two bounded slabs around the hub zeros
        const Int a0 = w.a[0], a1 = w.a[1];
        const Int lo = -(d + a0) / 2 - 1, hi = (a1 + d) / 2 + 1;
        for (Int mm = lo; mm <= hi; ++mm) {
            LatticePoint m{IntVec{mm}};
            Hub h = hub_at_lattice(w, m);
            if (min_abs_theta(h) < d) failing.push_back(make_point(w, m, std::move(h), false));
        }
    }

    // each failing lattice point contributes at most one defect-d weight:
    // defects along its delta-line step by the level
    Int best = -1;
    for (const RegionPoint& pt : failing) {
        const Int num = d - pt.defect;
        if (num < 0 || num % w.level != 0) continue;
        const Int k = num / w.level;
        const Int deg = add_ck(pt.degree, mul_ck(k, w.rank.e));
        if (deg > best) {
            best = deg;
            out.witnesses.clear();
        }
        if (deg == best)
            out.witnesses.push_back(
                BoundWitness{pt.m, add_delta(pt.eta.content, k), pt.hub, deg});
    }
    if (best >= 0) out.n = best + 1;
    return out;
}

VerifyResult verify_sharp_bound(const CrystalGraph& g, Int d, Int n, Criterion crit) {
    if (d < 0 || n < 0) throw std::invalid_argument("verification needs d, n >= 0");
    require_rank_for(g.weight, crit);

    VerifyResult out;
    if (d == 0) {  // nothing of defect 0 can fail either criterion's intent
        out.pass = (n == 0);
        return out;
    }
    if (n >= 1 && g.max_degree < n)
        throw CapTooLow("graph reaches degree " + std::to_string(g.max_degree) +
                        " but the bound needs degree " + std::to_string(n));

    for (const auto& [c, info] : g.vertices) {
        if (info.defect != d) continue;
        const bool ok = settled(info.hub, d, crit);
        if (info.degree >= n) {
            ++out.scanned;
            if (!ok) out.violations.push_back(c);
        }
        if (n >= 1 && info.degree == n - 1 && !ok) out.sharpness.push_back(c);
    }
    out.pass = out.violations.empty() && (n == 0 || !out.sharpness.empty());
    return out;
}

}  // namespace crystal
