#pragma once

#include <compare>

#include "crystal/common.hpp"

namespace crystal {

// Residue/Cartan data for the cyclic rank-e system. The pairing matrix is
// symmetric with 2 on the diagonal and -1 for each cyclic adjacency, so at
// e = 2 the two neighbour directions coincide and the off-diagonal is -2.
// Every row sums to zero.
struct RankData {
    Int e = 0;
    Int ell = 0;  // e - 1
    std::vector<IntVec> cartan;
};

RankData build_rank(Int e);  // throws InvalidRank for e < 2

// Dominant integral highest weight, given by its marks a_i >= 0 with
// positive level r = sum a_i.
struct HighestWeight {
    RankData rank;
    IntVec a;
    Int level = 0;
};

HighestWeight make_weight(Int e, IntVec a);

// Coefficient vector of lambda = Lambda - sum_i c_i alpha_i. Contents index
// weights throughout; entries may be any integers mid-computation even
// though module weights end up with nonnegative dominant representatives.
struct Content {
    IntVec c;
    auto operator<=>(const Content&) const = default;
};

// Pairings <lambda, h_i>. Entries always sum to the level.
struct Hub {
    IntVec theta;
    auto operator<=>(const Hub&) const = default;
};

Hub hub_of(const HighestWeight& w, const Content& c);

// a.c - (1/2) c^T C c; the quadratic term is always even, and the value is
// invariant under reflections.
Int defect_of(const HighestWeight& w, const Content& c);

Int degree_of(const Content& c);  // sum of entries

// Simple reflection at residue i: adds theta_i to c_i. An involution that
// preserves the defect and maps theta_j to theta_j - theta_i * C_ij.
Content reflect(const HighestWeight& w, const Content& c, Int i);

// Translation by the coweight with coordinates k (length e-1, padded with a
// leading zero). Lands on the unique delta-shift of the translated weight
// that stays in the same module; preserves the defect.
Content translate(const HighestWeight& w, const Content& c, const IntVec& k);

// c + k * (1,...,1): degree moves by k*e, defect by k*level, hub unchanged.
Content add_delta(const Content& c, Int k);

}  // namespace crystal
