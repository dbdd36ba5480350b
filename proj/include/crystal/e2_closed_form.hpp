#pragma once

#include "crystal/bounds.hpp"

namespace crystal {

// Closed-form invariants special to rank 2, where the max-weight lattice is
// one-dimensional and everything is quadratic in m.
struct E2Context {
    HighestWeight weight;
    Int a0 = 0, a1 = 0;
    Int r = 0;   // level
    Int b0 = 0;  // floor(a0 / 2), the left edge of the fundamental window
};

E2Context make_e2(Int a0, Int a1);  // throws InvalidWeight like make_weight

// m = q * r + u with u in the fundamental window [-b0, r - b0 - 1].
struct QU {
    Int q = 0;
    Int u = 0;
};

QU decompose(const E2Context& ctx, Int m);

// The delta-shift s(m) of the max weight over m has two circulating sign
// conventions for its cross term. `corrected` (cross term -q(a1 - 2u)) is
// the one that agrees with the direct search; `printed` (+q) is retained
// solely so reports can audit where it breaks.
enum class SVariant { corrected, printed };

Int s_closed(const E2Context& ctx, Int m, SVariant v = SVariant::corrected);

// Defect of the max weight over m; depends only on the window position u.
Int defect_closed(const E2Context& ctx, Int m);

struct MaxRow {
    Int m = 0, q = 0, u = 0;
    Int s = 0, defect = 0, degree = 0;
    Hub hub;
    Content content;
};

MaxRow closed_invariants(const E2Context& ctx, Int m, SVariant v = SVariant::corrected);

std::vector<MaxRow> max_weight_table(const E2Context& ctx, Int m_lo, Int m_hi,
                                     SVariant v = SVariant::corrected);

// Closed over-estimate of the sharp bound: q = ceil((d + max(a0,a1)) / 2r),
// value = 2rq^2 + q(r + a1).
struct CoarseBound {
    Int d = 0;
    Int q = 0;
    Int value = 0;
};

CoarseBound coarse_bound(const E2Context& ctx, Int d);

struct CoarseCheck {
    bool pass = false;
    Int value = 0;  // the coarse bound checked
    Int sharp = 0;  // the exact bound it must dominate
    std::vector<Content> violations;  // defect-d vertices >= value, unsettled
};

// Certifies the coarse bound on an enumerated graph: every defect-d vertex
// at degree >= value must have some theta_i <= -d, and value >= sharp.
CoarseCheck verify_coarse_bound(const E2Context& ctx, Int d, const CrystalGraph& g);

struct VariantWitness {
    Int m = 0;
    Int closed = 0;  // what the requested variant predicts
    Int oracle = 0;  // what the direct search finds
};

// Every m in [lo, hi] where the requested variant disagrees with the search.
std::vector<VariantWitness> variant_audit(const E2Context& ctx, Int lo, Int hi, SVariant v);

}  // namespace crystal
