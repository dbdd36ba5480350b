#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "crystal/reports.hpp"

namespace rep = crystal::reports;
using crystal::Int;
using crystal::IntVec;

namespace {

// "lo..hi", both ends signed
bool parse_range(const std::string& text, Int& lo, Int& hi) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) return false;
    try {
        std::size_t used = 0;
        lo = std::stoll(text.substr(0, pos), &used);
        if (used != pos) return false;
        const std::string rest = text.substr(pos + 2);
        hi = std::stoll(rest, &used);
        if (used != rest.size() || rest.empty()) return false;
    } catch (...) {
        return false;
    }
    return true;
}

rep::Format parse_format(const std::string& name) {
    if (name == "text") return rep::Format::text;
    if (name == "csv") return rep::Format::csv;
    if (name == "json") return rep::Format::json;
    return rep::Format::dot;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, weight graphs and degree bounds for cyclic "
                 "highest-weight modules"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output_path = "-";
    app.add_option("--output", output_path, "write the report to this file instead of stdout");

    // table ----------------------------------------------------------------
    auto* table = app.add_subcommand("table", "max-weight invariants over lattice points");
    Int t_e = 2;
    IntVec t_weight;
    std::string t_range, t_box, t_format = "csv", t_variant = "corrected";
    table->add_option("--e", t_e, "rank (number of residues)")->required();
    table->add_option("--weight", t_weight, "marks, comma-separated")->required()->delimiter(',');
    table->add_option("--m-range", t_range,
                      "lo..hi over the rank-2 lattice; closed forms, cross-checked "
                      "against the search");
    table->add_option("--m-box", t_box, "lo..hi box in every lattice coordinate (any rank)");
    table->add_option("--format", t_format, "csv, text or json (default csv)")
        ->check(CLI::IsMember({"csv", "text", "json"}));
    table->add_option("--s-variant", t_variant, "shift sign convention (default corrected)")
        ->check(CLI::IsMember({"corrected", "printed"}));

    // graph ----------------------------------------------------------------
    auto* graph = app.add_subcommand("graph", "weight graph up to a degree cap");
    Int g_e = 2, g_degree = 6;
    IntVec g_weight;
    std::string g_format = "dot";
    graph->add_option("--e", g_e, "rank (number of residues)")->required();
    graph->add_option("--weight", g_weight, "marks, comma-separated")->required()->delimiter(',');
    graph->add_option("--max-degree", g_degree, "degree cap (default 6)");
    graph->add_option("--format", g_format, "dot, json or text (default dot)")
        ->check(CLI::IsMember({"dot", "json", "text"}));

    // bounds ---------------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "sharp and coarse degree bounds per defect");
    Int b_e = 2;
    IntVec b_weight, b_defects, b_expect;
    std::string b_criterion = "reduction", b_format = "csv";
    bounds->add_option("--e", b_e, "rank (number of residues)")->required();
    bounds->add_option("--weight", b_weight, "marks, comma-separated")->required()->delimiter(',');
    bounds->add_option("--defects", b_defects, "defect values, comma-separated")
        ->required()
        ->delimiter(',');
    bounds->add_option("--criterion", b_criterion,
                       "settledness test: reduction (any rank) or both-sides (rank 2)")
        ->check(CLI::IsMember({"reduction", "both-sides"}));
    auto* expect_opt =
        bounds->add_option("--expect", b_expect,
                           "expected bounds, comma-separated; mismatches are noted")
            ->delimiter(',');
    bounds->add_option("--format", b_format, "csv, text or json (default csv)")
        ->check(CLI::IsMember({"csv", "text", "json"}));

    // check ----------------------------------------------------------------
    auto* check = app.add_subcommand("check", "property sweep over a small weight matrix");
    rep::CheckConfig ck;
    std::string c_range, c_format = "text", c_variant = "corrected";
    check->add_option("--es", ck.es, "ranks to cover (default 2,3)")->delimiter(',');
    check->add_option("--max-level", ck.max_level, "largest level in the matrix (default 3)");
    check->add_option("--max-degree", ck.max_degree,
                      "graph cap for the externality sweep (default 20)");
    check->add_option("--m-range", c_range, "lattice range for closed forms (default -12..12)");
    check->add_option("--region-max-defect", ck.region_max_defect,
                      "largest defect for region sweeps (default 4)");
    check->add_option("--s-variant", c_variant, "shift sign convention under test")
        ->check(CLI::IsMember({"corrected", "printed"}));
    check->add_option("--seed", ck.seed, "seed for the randomised profile checks");
    check->add_option("--format", c_format, "text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (output_path != "-") {
        file.open(output_path);
        if (!file) {
            std::cerr << "error: cannot open " << output_path << " for writing\n";
            return 2;
        }
        out = &file;
    }

    try {
        if (table->parsed()) {
            rep::TableConfig cfg;
            cfg.e = t_e;
            cfg.weight = t_weight;
            if (!t_range.empty()) {
                if (!parse_range(t_range, cfg.m_lo, cfg.m_hi))
                    throw std::invalid_argument("--m-range wants lo..hi");
                cfg.use_range = true;
            }
            if (!t_box.empty()) {
                if (!parse_range(t_box, cfg.box_lo, cfg.box_hi))
                    throw std::invalid_argument("--m-box wants lo..hi");
                cfg.use_box = true;
            }
            cfg.variant = t_variant == "printed" ? crystal::SVariant::printed
                                                 : crystal::SVariant::corrected;
            cfg.format = parse_format(t_format);
            return rep::run_table(cfg, *out, std::cerr);
        }
        if (graph->parsed()) {
            rep::GraphConfig cfg;
            cfg.e = g_e;
            cfg.weight = g_weight;
            cfg.max_degree = g_degree;
            cfg.format = parse_format(g_format);
            return rep::run_graph(cfg, *out, std::cerr);
        }
        if (bounds->parsed()) {
            rep::BoundsConfig cfg;
            cfg.e = b_e;
            cfg.weight = b_weight;
            cfg.defects = b_defects;
            cfg.criterion = b_criterion == "both-sides" ? crystal::Criterion::both_sides
                                                        : crystal::Criterion::reduction;
            if (expect_opt->count()) cfg.expect = b_expect;
            cfg.format = parse_format(b_format);
            return rep::run_bounds(cfg, *out, std::cerr);
        }
        if (check->parsed()) {
            if (!c_range.empty() && !parse_range(c_range, ck.m_lo, ck.m_hi))
                throw std::invalid_argument("--m-range wants lo..hi");
            ck.variant = c_variant == "printed" ? crystal::SVariant::printed
                                                : crystal::SVariant::corrected;
            ck.format = parse_format(c_format);
            return rep::run_check(ck, *out, std::cerr);
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const crystal::Error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 2;
}
