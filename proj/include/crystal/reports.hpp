#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "crystal/e2_closed_form.hpp"

namespace crystal::reports {

enum class Format { text, csv, json, dot };

std::string content_str(const Content& c);
std::string hub_str(const Hub& h);
std::string lattice_str(const LatticePoint& m);

// Every run_* writer streams the report to `out`, complaints to `diag`, and
// returns a process exit code: 0 clean, 1 when an internal cross-check
// failed (nothing is written to `out` in that case, so scripts never see a
// half-trusted report). Config-shape errors surface as
// std::invalid_argument for the caller to map.

// Max-weight table. Range mode is rank-2 only: rows come from the closed
// forms in the requested sign variant and every row is replayed against the
// direct search; a disagreement aborts with exit 1 and per-row diagnostics.
// Box mode sweeps an |entry| <= bound box of lattice points at any rank,
// straight from the search.
struct TableConfig {
    Int e = 2;
    IntVec weight;
    bool use_range = false;
    Int m_lo = 0, m_hi = 0;
    bool use_box = false;
    Int box_lo = 0, box_hi = 0;
    SVariant variant = SVariant::corrected;
    Format format = Format::csv;
};
int run_table(const TableConfig& cfg, std::ostream& out, std::ostream& diag);

// Weight graph up to a degree cap, as Graphviz dot (record nodes labelled
// content|hub|defect, one rank group per degree), JSON, or plain text.
struct GraphConfig {
    Int e = 2;
    IntVec weight;
    Int max_degree = 6;
    Format format = Format::dot;
};
int run_graph(const GraphConfig& cfg, std::ostream& out, std::ostream& diag);

// Sharp bounds for a list of defects, each certified against one enumerated
// graph before anything is printed. Rank 2 rows also carry the coarse
// closed-form bound. `expect` adds a note column entry where the computed
// bound differs from the expectation (the computation still stands).
struct BoundsConfig {
    Int e = 2;
    IntVec weight;
    IntVec defects;
    Criterion criterion = Criterion::reduction;
    std::optional<IntVec> expect;
    Format format = Format::csv;
};
int run_bounds(const BoundsConfig& cfg, std::ostream& out, std::ostream& diag);

// Self-contained property sweep over a small weight matrix: residue-chain
// defect profiles, the externality criterion, closed forms vs search, and
// region soundness. Exit 1 when any suite fails; the report carries the
// witnesses either way, plus an audit of where the printed sign variant
// departs from the search.
struct CheckConfig {
    IntVec es{2, 3};
    Int max_level = 3;
    Int max_degree = 20;
    Int m_lo = -12, m_hi = 12;
    Int region_max_defect = 4;
    SVariant variant = SVariant::corrected;
    std::uint64_t seed = 20260816;
    Format format = Format::text;
};
int run_check(const CheckConfig& cfg, std::ostream& out, std::ostream& diag);

}  // namespace crystal::reports
