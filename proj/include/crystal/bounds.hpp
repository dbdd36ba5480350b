#pragma once

#include "crystal/crystal_graph.hpp"
#include "crystal/rational.hpp"

namespace crystal {

// Which residue profile counts a weight as settled when scanning for
// degree bounds:
//   reduction  — some theta_i <= -d (a defect-preserving reflection drops
//                the degree by at least d); finite for every rank.
//   both_sides — every |theta_i| >= d; only finite at rank e = 2, where the
//                failing set is a pair of bounded slabs. Rejected otherwise.
enum class Criterion { reduction, both_sides };

struct RegionPoint {
    LatticePoint m;
    MaxWeight eta;    // the max weight over m
    Hub hub;
    Int defect = 0;   // defect of eta
    Int degree = 0;   // degree of eta
    bool boundary = false;  // min_i theta_i == -d exactly (settled already)
};

// Lattice points of the closed simplex {x : theta_i(x) >= -d for all i},
// found by solving the e corner systems exactly, boxing them, and sweeping
// the box. Points are in lexicographic m order. shell_reducible certifies
// at runtime that the box's outermost layer contains no strictly interior
// point, i.e. the sweep cannot have clipped the region.
struct RegionReport {
    Int d = 0;
    std::vector<std::vector<Rat>> simplex_corners;   // corner k relaxes constraint k
    std::vector<std::pair<Int, Int>> bounding_box;   // per coordinate [lo, hi]
    std::vector<RegionPoint> points;
    bool shell_reducible = false;
};

RegionReport region_points(const HighestWeight& w, Int d);

struct BoundWitness {
    LatticePoint m;
    Content content;  // the defect-d weight of maximal degree over m
    Hub hub;
    Int degree = 0;
};

struct SharpBound {
    Int d = 0;
    Int n = 0;  // least degree from which every defect-d weight is settled
    std::vector<BoundWitness> witnesses;  // unsettled defect-d weights at n - 1
};

// Exact bound for the given defect: max weights whose hub still fails the
// criterion are enumerated (finitely many), each contributes its defect-d
// delta-shift when the stratum meets its delta-line, and n is one past the
// largest such degree. n = 0 when d = 0 or the stratum misses every
// failing line.
SharpBound sharp_bound(const HighestWeight& w, Int d,
                       Criterion crit = Criterion::reduction);

struct VerifyResult {
    bool pass = false;
    Int scanned = 0;                  // defect-d vertices at degree >= n
    std::vector<Content> violations;  // scanned vertices still unsettled
    std::vector<Content> sharpness;   // unsettled defect-d vertices at n - 1
};

// Brute-force certification of a claimed bound against an enumerated graph:
// above the bound nothing may fail the criterion, and (for n >= 1) the row
// just below must contain a failing witness. Throws CapTooLow when the
// graph cannot reach degree n.
VerifyResult verify_sharp_bound(const CrystalGraph& g, Int d, Int n,
                                Criterion crit = Criterion::reduction);

}  // namespace crystal
