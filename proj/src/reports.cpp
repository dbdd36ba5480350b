#include "crystal/reports.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>

#include <json.hpp>

namespace crystal::reports {

using nlohmann::ordered_json;

std::string content_str(const Content& c) { return bracketed(c.c, '(', ')'); }
std::string hub_str(const Hub& h) { return bracketed(h.theta, '[', ']'); }
std::string lattice_str(const LatticePoint& m) { return bracketed(m.m, '(', ')'); }

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string weight_str(const IntVec& a) { return bracketed(a, '(', ')'); }

// ---------------------------------------------------------------- table --

struct TableRow {
    std::string m_label;
    ordered_json m_json;
    Hub hub;
    Int defect = 0;
    Content content;
    Int degree = 0;
};

void emit_table(const TableConfig& cfg, const std::vector<TableRow>& rows,
                std::ostream& out) {
    switch (cfg.format) {
        case Format::csv:
            out << "m,hub,defect,content,degree\n";
            for (const auto& r : rows)
                out << csv_field(r.m_label) << ',' << csv_field(hub_str(r.hub)) << ','
                    << r.defect << ',' << csv_field(content_str(r.content)) << ','
                    << r.degree << '\n';
            break;
        case Format::text:
            out << "max weights for e=" << cfg.e << " weight " << weight_str(cfg.weight)
                << '\n';
            for (const auto& r : rows)
                out << "m=" << r.m_label << " hub=" << hub_str(r.hub)
                    << " defect=" << r.defect << " content=" << content_str(r.content)
                    << " degree=" << r.degree << '\n';
            break;
        case Format::json: {
            ordered_json j;
            j["e"] = cfg.e;
            j["weight"] = cfg.weight;
            j["rows"] = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json row;
                row["m"] = r.m_json;
                row["hub"] = r.hub.theta;
                row["defect"] = r.defect;
                row["content"] = r.content.c;
                row["degree"] = r.degree;
                j["rows"].push_back(std::move(row));
            }
            out << j.dump(2) << '\n';
            break;
        }
        case Format::dot:
            throw std::invalid_argument("tables have no dot form");
    }
}

}  // namespace

int run_table(const TableConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (cfg.use_range == cfg.use_box)
        throw std::invalid_argument("exactly one of m-range / m-box is required");
    const HighestWeight w = make_weight(cfg.e, cfg.weight);

    std::vector<TableRow> rows;
    if (cfg.use_range) {
        if (cfg.e != 2) throw std::invalid_argument("m-range mode needs e = 2");
        if (cfg.m_lo > cfg.m_hi) throw std::invalid_argument("empty m range");
        const E2Context ctx = make_e2(cfg.weight[0], cfg.weight[1]);
        bool bad = false;
        for (Int m = cfg.m_lo; m <= cfg.m_hi; ++m) {
            const MaxRow row = closed_invariants(ctx, m, cfg.variant);
            const MaxWeight found = max_weight_at(w, LatticePoint{IntVec{m}});
            if (row.s != found.s || row.content != found.content ||
                row.hub != hub_of(w, found.content) ||
                row.defect != defect_of(w, found.content) ||
                row.degree != degree_of(found.content)) {
                diag << "closed form disagrees with search at m=" << m << ": closed s="
                     << row.s << ", search s=" << found.s << '\n';
                bad = true;
                continue;
            }
            rows.push_back(TableRow{std::to_string(m), ordered_json(m), row.hub,
                                    row.defect, row.content, row.degree});
        }
        if (bad) return 1;
    } else {
        if (cfg.box_lo > cfg.box_hi) throw std::invalid_argument("empty m box");
        const Int ell = w.rank.ell;
        LatticePoint m;
        m.m.assign(static_cast<std::size_t>(ell), cfg.box_lo);
        for (;;) {
            const MaxWeight found = max_weight_at(w, m);
            rows.push_back(TableRow{lattice_str(m), ordered_json(m.m),
                                    hub_of(w, found.content),
                                    defect_of(w, found.content), found.content,
                                    degree_of(found.content)});
            Int j = ell - 1;
            while (j >= 0 && m.m[j] == cfg.box_hi) {
                m.m[j] = cfg.box_lo;
                --j;
            }
            if (j < 0) break;
            ++m.m[j];
        }
    }
    emit_table(cfg, rows, out);
    return 0;
}

// ---------------------------------------------------------------- graph --

int run_graph(const GraphConfig& cfg, std::ostream& out, std::ostream&) {
    const HighestWeight w = make_weight(cfg.e, cfg.weight);
    const CrystalGraph g = enumerate_graph(w, cfg.max_degree);

    std::map<Int, std::vector<const Content*>> by_degree;
    for (const auto& [c, info] : g.vertices) by_degree[info.degree].push_back(&c);

    switch (cfg.format) {
        case Format::dot: {
            out << "digraph crystal {\n  rankdir=TB;\n  node [shape=record];\n";
            for (const auto& [c, info] : g.vertices)
                out << "  \"" << content_str(c) << "\" [label=\"" << content_str(c)
                    << '|' << hub_str(info.hub) << '|' << info.defect << "\"];\n";
            for (const auto& [deg, group] : by_degree) {
                out << "  { rank=same;";
                for (const Content* c : group) out << " \"" << content_str(*c) << "\";";
                out << " }\n";
            }
            for (const auto& [from, i] : g.edges) {
                Content to = from;
                to.c[i] += 1;
                out << "  \"" << content_str(from) << "\" -> \"" << content_str(to)
                    << "\" [label=\"" << i << "\"];\n";
            }
            out << "}\n";
            break;
        }
        case Format::json: {
            ordered_json j;
            j["e"] = cfg.e;
            j["weight"] = cfg.weight;
            j["max_degree"] = cfg.max_degree;
            j["vertices"] = ordered_json::array();
            for (const auto& [c, info] : g.vertices) {
                ordered_json v;
                v["content"] = c.c;
                v["hub"] = info.hub.theta;
                v["defect"] = info.defect;
                v["degree"] = info.degree;
                j["vertices"].push_back(std::move(v));
            }
            j["edges"] = ordered_json::array();
            for (const auto& [from, i] : g.edges) {
                Content to = from;
                to.c[i] += 1;
                ordered_json e;
                e["from"] = from.c;
                e["to"] = to.c;
                e["residue"] = i;
                j["edges"].push_back(std::move(e));
            }
            out << j.dump(2) << '\n';
            break;
        }
        case Format::text: {
            out << "graph for e=" << cfg.e << " weight " << weight_str(cfg.weight)
                << " up to degree " << cfg.max_degree << ": " << g.vertices.size()
                << " vertices, " << g.edges.size() << " edges\n";
            for (const auto& [deg, group] : by_degree) {
                out << "degree " << deg << ':';
                for (const Content* c : group) out << ' ' << content_str(*c);
                out << '\n';
            }
            out << "edges:\n";
            for (const auto& [from, i] : g.edges) {
                Content to = from;
                to.c[i] += 1;
                out << content_str(from) << " -" << i << "-> " << content_str(to) << '\n';
            }
            break;
        }
        case Format::csv:
            throw std::invalid_argument("graphs have no csv form");
    }
    return 0;
}

// --------------------------------------------------------------- bounds --

namespace {

struct BoundRowData {
    Int d = 0;
    SharpBound sharp;
    std::optional<CoarseBound> coarse;
    std::string note;
};

std::string witnesses_str(const SharpBound& sb) {
    std::string out;
    for (std::size_t i = 0; i < sb.witnesses.size(); ++i) {
        if (i) out += ';';
        out += content_str(sb.witnesses[i].content);
    }
    return out;
}

}  // namespace

int run_bounds(const BoundsConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (cfg.defects.empty()) throw std::invalid_argument("no defects requested");
    if (cfg.criterion == Criterion::both_sides && cfg.e != 2)
        throw std::invalid_argument("the both-sides criterion needs e = 2");
    if (cfg.expect && cfg.expect->size() != cfg.defects.size())
        throw std::invalid_argument("expectation list must match the defect list");
    const HighestWeight w = make_weight(cfg.e, cfg.weight);
    std::optional<E2Context> ctx;
    if (cfg.e == 2) ctx = make_e2(cfg.weight[0], cfg.weight[1]);

    std::vector<BoundRowData> rows;
    Int max_n = 0;
    for (std::size_t idx = 0; idx < cfg.defects.size(); ++idx) {
        const Int d = cfg.defects[idx];
        BoundRowData row;
        row.d = d;
        row.sharp = sharp_bound(w, d, cfg.criterion);
        if (ctx) row.coarse = coarse_bound(*ctx, d);
        if (cfg.expect && (*cfg.expect)[idx] != row.sharp.n)
            row.note = "computed " + std::to_string(row.sharp.n) + " != expected " +
                       std::to_string((*cfg.expect)[idx]);
        if (row.sharp.n == 0 && d > 0) {
            if (!row.note.empty()) row.note += "; ";
            row.note += "no failing weights in stratum";
        }
        max_n = std::max(max_n, row.sharp.n);
        rows.push_back(std::move(row));
    }

    // certify every bound against one shared enumeration before printing
    const CrystalGraph g = enumerate_graph(w, add_ck(max_n, mul_ck(2, cfg.e)));
    for (const auto& row : rows) {
        const VerifyResult v = verify_sharp_bound(g, row.d, row.sharp.n, cfg.criterion);
        if (!v.pass) {
            diag << "certification failed for d=" << row.d << ", N=" << row.sharp.n;
            if (!v.violations.empty())
                diag << ": unsettled vertex " << content_str(v.violations.front())
                     << " at degree >= N";
            else
                diag << ": no sharpness witness at degree N-1";
            diag << '\n';
            return 1;
        }
    }

    switch (cfg.format) {
        case Format::csv:
            out << "d,q,N,Nprime,witnesses,note\n";
            for (const auto& row : rows) {
                out << row.d << ',';
                if (row.coarse) out << row.coarse->q;
                out << ',' << row.sharp.n << ',';
                if (row.coarse) out << row.coarse->value;
                out << ',' << csv_field(witnesses_str(row.sharp)) << ','
                    << csv_field(row.note) << '\n';
            }
            break;
        case Format::text:
            out << "degree bounds for e=" << cfg.e << " weight " << weight_str(cfg.weight)
                << " ("
                << (cfg.criterion == Criterion::reduction ? "reduction" : "both-sides")
                << " criterion)\n";
            for (const auto& row : rows) {
                out << "d=" << row.d << ": N=" << row.sharp.n;
                if (row.coarse)
                    out << " (q=" << row.coarse->q << ", N'=" << row.coarse->value << ')';
                if (!row.sharp.witnesses.empty())
                    out << " witnesses " << witnesses_str(row.sharp);
                if (!row.note.empty()) out << " -- " << row.note;
                out << '\n';
            }
            break;
        case Format::json: {
            ordered_json j;
            j["e"] = cfg.e;
            j["weight"] = cfg.weight;
            j["criterion"] =
                cfg.criterion == Criterion::reduction ? "reduction" : "both-sides";
            j["rows"] = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json r;
                r["d"] = row.d;
                r["n"] = row.sharp.n;
                if (row.coarse) {
                    r["q"] = row.coarse->q;
                    r["nprime"] = row.coarse->value;
                }
                r["witnesses"] = ordered_json::array();
                for (const auto& wit : row.sharp.witnesses)
                    r["witnesses"].push_back(wit.content.c);
                r["note"] = row.note;
                j["rows"].push_back(std::move(r));
            }
            out << j.dump(2) << '\n';
            break;
        }
        case Format::dot:
            throw std::invalid_argument("bounds have no dot form");
    }
    return 0;
}

// ---------------------------------------------------------------- check --

namespace {

struct SuiteOutcome {
    std::string name;
    bool pass = true;
    Int checks = 0;
    std::vector<std::string> notes;
    ordered_json details = ordered_json::object();

    void fail(std::string note) {
        pass = false;
        notes.push_back(std::move(note));
    }
};

std::vector<HighestWeight> weight_matrix(const IntVec& es, Int max_level) {
    std::vector<HighestWeight> out;
    for (Int e : es) {
        for (Int lvl = 1; lvl <= max_level; ++lvl) {
            IntVec a(static_cast<std::size_t>(e), 0);
            for (;;) {  // odometer over [0, lvl]^e, keeping sum == lvl
                Int sum = 0;
                for (Int ai : a) sum += ai;
                if (sum == lvl) out.push_back(make_weight(e, a));
                Int j = e - 1;
                while (j >= 0 && a[j] == lvl) {
                    a[j] = 0;
                    --j;
                }
                if (j < 0) break;
                ++a[j];
            }
        }
    }
    return out;
}

SuiteOutcome suite_profiles(const CheckConfig& cfg,
                            const std::vector<HighestWeight>& weights) {
    SuiteOutcome s;
    s.name = "string-profiles";
    std::mt19937_64 rng(cfg.seed);
    for (const HighestWeight& w : weights) {
        const Int e = w.rank.e;
        // quadratic defect law along a residue direction, random start points
        for (int rep = 0; rep < 25; ++rep) {
            Content c;
            c.c.resize(static_cast<std::size_t>(e));
            for (Int& ci : c.c) ci = static_cast<Int>(rng() % 9) - 4;
            const Hub h = hub_of(w, c);
            const Int def = defect_of(w, c);
            for (Int i = 0; i < e; ++i) {
                const Int t = h.theta[i];
                if (t < 0) continue;
                for (Int k = 0; k <= t; ++k) {
                    Content ck = c;
                    ck.c[i] += k;
                    ++s.checks;
                    if (defect_of(w, ck) != def + k * (t - k))
                        s.fail("defect law broken at " + weight_str(w.a) + " from " +
                               content_str(c) + " residue " + std::to_string(i));
                }
            }
        }
        // chains hanging off the highest weight itself
        for (Int i = 0; i < e; ++i) {
            for (Int k = 0; k <= w.a[i]; ++k) {
                Content c;
                c.c.assign(static_cast<std::size_t>(e), 0);
                c.c[i] = k;
                ++s.checks;
                if (defect_of(w, c) != k * (w.a[i] - k))
                    s.fail("top-chain defect broken at " + weight_str(w.a) +
                           " residue " + std::to_string(i));
            }
        }
        // full chains across a small graph; string_through asserts the
        // length/reflection structure internally
        const CrystalGraph g = enumerate_graph(w, e == 2 ? 10 : 6);
        for (const auto& [c, info] : g.vertices) {
            for (Int i = 0; i < e; ++i) {
                const auto chain = string_through(g, c, i);
                const Int width = static_cast<Int>(chain.size()) - 1;
                const Int top_def = defect_of(w, chain.front());
                for (Int k = 0; k <= width; ++k) {
                    ++s.checks;
                    if (defect_of(w, chain[static_cast<std::size_t>(k)]) !=
                        top_def + k * (width - k))
                        s.fail("chain profile broken at " + weight_str(w.a) +
                               " through " + content_str(c));
                }
            }
        }
    }
    return s;
}

SuiteOutcome suite_externality(const CheckConfig& cfg,
                               const std::vector<HighestWeight>& weights) {
    SuiteOutcome s;
    s.name = "externality-criterion";
    s.details["violations"] = ordered_json::array();
    for (const HighestWeight& w : weights) {
        const CrystalGraph g = enumerate_graph(w, cfg.max_degree);
        const CriterionReport report = check_externality_criterion(g);
        s.checks += report.pairs_checked;
        for (const auto& v : report.violations) {
            s.fail("criterion violated at " + weight_str(w.a) + " content " +
                   content_str(v.content) + " residue " + std::to_string(v.residue));
            ordered_json detail;
            detail["weight"] = w.a;
            detail["content"] = v.content.c;
            detail["residue"] = v.residue;
            s.details["violations"].push_back(std::move(detail));
        }
    }
    return s;
}

SuiteOutcome suite_closed_forms(const CheckConfig& cfg,
                                const std::vector<HighestWeight>& weights) {
    SuiteOutcome s;
    s.name = "closed-form-oracle";
    s.details["mismatches"] = ordered_json::array();
    s.details["printed_variant_audit"] = ordered_json::array();
    for (const HighestWeight& w : weights) {
        if (w.rank.e != 2) continue;
        const E2Context ctx = make_e2(w.a[0], w.a[1]);
        for (Int m = cfg.m_lo; m <= cfg.m_hi; ++m) {
            const MaxRow row = closed_invariants(ctx, m, cfg.variant);
            const MaxWeight found = max_weight_at(w, LatticePoint{IntVec{m}});
            ++s.checks;
            if (row.s != found.s || row.content != found.content ||
                row.defect != defect_of(w, found.content)) {
                s.fail("closed form off at " + weight_str(w.a) + " m=" +
                       std::to_string(m) + ": closed s=" + std::to_string(row.s) +
                       ", search s=" + std::to_string(found.s));
                ordered_json detail;
                detail["weight"] = w.a;
                detail["m"] = m;
                detail["closed"] = row.s;
                detail["search"] = found.s;
                s.details["mismatches"].push_back(std::move(detail));
            }
        }
        // where does the alternate sign convention depart from the search?
        for (const auto& wit : variant_audit(ctx, cfg.m_lo, cfg.m_hi, SVariant::printed)) {
            ordered_json detail;
            detail["weight"] = w.a;
            detail["m"] = wit.m;
            detail["closed"] = wit.closed;
            detail["search"] = wit.oracle;
            s.details["printed_variant_audit"].push_back(std::move(detail));
        }
    }
    return s;
}

SuiteOutcome suite_regions(const CheckConfig& cfg,
                           const std::vector<HighestWeight>& weights) {
    SuiteOutcome s;
    s.name = "region-soundness";
    for (const HighestWeight& w : weights) {
        for (Int d = 1; d <= cfg.region_max_defect; ++d) {
            const RegionReport rep = region_points(w, d);
            ++s.checks;
            if (!rep.shell_reducible)
                s.fail("bounding box clipped the region at " + weight_str(w.a) +
                       " d=" + std::to_string(d));
            for (const auto& pt : rep.points) {
                ++s.checks;
                if (!is_max_weight(w, pt.eta.content) ||
                    pt.hub != hub_of(w, pt.eta.content))
                    s.fail("bad region point " + lattice_str(pt.m) + " at " +
                           weight_str(w.a) + " d=" + std::to_string(d));
            }
        }
    }
    return s;
}

}  // namespace

int run_check(const CheckConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (cfg.es.empty()) throw std::invalid_argument("no ranks requested");
    for (Int e : cfg.es)
        if (e < 2) throw std::invalid_argument("ranks must be >= 2");
    if (cfg.max_level < 1) throw std::invalid_argument("max level must be >= 1");
    if (cfg.m_lo > cfg.m_hi) throw std::invalid_argument("empty m range");
    if (cfg.format != Format::text && cfg.format != Format::json)
        throw std::invalid_argument("check reports come as text or json");

    const auto weights = weight_matrix(cfg.es, cfg.max_level);
    std::vector<SuiteOutcome> suites;
    suites.push_back(suite_profiles(cfg, weights));
    suites.push_back(suite_externality(cfg, weights));
    suites.push_back(suite_closed_forms(cfg, weights));
    suites.push_back(suite_regions(cfg, weights));

    const bool all_pass =
        std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.pass; });

    if (cfg.format == Format::json) {
        ordered_json j;
        j["status"] = all_pass ? "pass" : "fail";
        j["seed"] = cfg.seed;
        j["variant"] = cfg.variant == SVariant::corrected ? "corrected" : "printed";
        j["weights_checked"] = static_cast<Int>(weights.size());
        j["suites"] = ordered_json::array();
        for (const auto& s : suites) {
            ordered_json obj;
            obj["name"] = s.name;
            obj["status"] = s.pass ? "pass" : "fail";
            obj["checks"] = s.checks;
            obj["notes"] = s.notes;
            for (const auto& [key, value] : s.details.items()) obj[key] = value;
            j["suites"].push_back(std::move(obj));
        }
        out << j.dump(2) << '\n';
    } else {
        int failed = 0;
        for (const auto& s : suites) {
            out << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << " (" << s.checks
                << " checks)\n";
            if (!s.pass) ++failed;
            const std::size_t shown = std::min<std::size_t>(s.notes.size(), 10);
            for (std::size_t i = 0; i < shown; ++i) out << "  " << s.notes[i] << '\n';
            if (s.notes.size() > shown)
                out << "  ... (" << s.notes.size() - shown << " more)\n";
        }
        if (all_pass)
            out << "all " << suites.size() << " suites passed\n";
        else
            out << failed << " of " << suites.size() << " suites failed\n";
    }
    if (!all_pass) diag << "property check failed\n";
    return all_pass ? 0 : 1;
}

}  // namespace crystal::reports
