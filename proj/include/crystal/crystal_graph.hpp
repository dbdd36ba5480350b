#pragma once

#include <map>
#include <utility>

#include "crystal/membership.hpp"

namespace crystal {

struct VertexInfo {
    Hub hub;
    Int defect = 0;
    Int degree = 0;
};

// Weights of the module up to a degree cap, with the residue-labelled edges
// between adjacent degrees. Vertices are keyed by content in lexicographic
// order and edges are stored sorted by (source, residue), so two builds of
// the same graph are bit-identical.
struct CrystalGraph {
    HighestWeight weight;
    Int max_degree = 0;
    std::map<Content, VertexInfo> vertices;
    std::vector<std::pair<Content, Int>> edges;  // source -> source + alpha_i
};

// Degree-shell breadth-first enumeration from the empty content. Every
// weight is reachable by single-residue steps from the one above it, so
// expanding each shell by +alpha_i and filtering through membership is
// complete.
CrystalGraph enumerate_graph(const HighestWeight& w, Int max_degree);

// The full residue-i chain through vertex c, top (lowest degree) first.
// Walks the membership test directly, so the chain is complete even where
// it leaves the enumerated degree range. Throws VertexNotFound when c is
// not in g.
std::vector<Content> string_through(const CrystalGraph& g, const Content& c, Int i);

// Whether the weight c sits at the end of its residue-i chain on the side
// its hub entry points to: the top end for theta_i > 0, the bottom end for
// theta_i < 0, trivially so for theta_i = 0. Throws NotAMember when c is
// not a weight.
bool is_external(const HighestWeight& w, const Content& c, Int i);

struct CriterionViolation {
    Content content;
    Int residue = 0;
};

struct CriterionReport {
    Int pairs_checked = 0;
    std::vector<CriterionViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Sweeps every (vertex, residue) pair of the graph and records each pair
// where defect <= |theta_i| failed to imply i-externality. Expected empty.
CriterionReport check_externality_criterion(const CrystalGraph& g);

struct ReduceResult {
    Content rep;
    IntVec word;
};

// Greedy degree reduction through reflections at residues with
// theta_i <= -defect. Only strictly negative entries are used (a zero entry
// reflects to itself), each step strictly lowers the degree, and ties pick
// the most negative entry, then the smallest residue.
ReduceResult reduce_weight(const HighestWeight& w, Content c);

}  // namespace crystal
