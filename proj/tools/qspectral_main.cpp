// Command-line surface for the library: partial transpose, exact spectra,
// TU coefficient expansion, pair checks, partial-symmetry counting, the
// constructive families, the exhaustive survey, and the pinned fixtures.
//
// Exit codes: 0 success, 1 internal error, 2 usage error, 3 budget
// exceeded, 4 verification mismatch.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qspectral/generators.hpp"
#include "qspectral/graph.hpp"
#include "qspectral/graph_io.hpp"
#include "qspectral/iso.hpp"
#include "qspectral/parallel.hpp"
#include "qspectral/sampling.hpp"
#include "qspectral/spectral.hpp"
#include "qspectral/survey.hpp"
#include "qspectral/tu.hpp"

using json = nlohmann::ordered_json;
using namespace qspectral;

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMismatch = 4;

struct GraphInput {
    std::string path;    // file or "-" for stdin
    std::string edges;   // inline "u-v,..." spec
    int q = -1;          // cluster size for inline/graph6 input

    void attach(CLI::App* cmd, bool primary = true, bool with_q = true) {
        const std::string suffix = primary ? "" : "2";
        cmd->add_option("--input" + suffix, path,
                        "edge-list or graph6 file ('-' for standard input)");
        cmd->add_option("--edges" + suffix, edges, "inline edge list, e.g. 0-2,1-2,2-3");
        if (primary && with_q) cmd->add_option("--q", q, "cluster size for inline or graph6 input");
    }

    Graph load_plain(const GraphInput& shared) const {
        const int qq = q >= 0 ? q : shared.q;
        if (!edges.empty() || (path.empty() && qq >= 0)) {
            if (qq < 0) throw CLI::ValidationError("--edges input needs --q");
            return ClusteredGraph(qq, parse_edge_spec(edges));
        }
        if (path.empty()) throw CLI::ValidationError("no graph input given (use --input or --edges)");
        std::ifstream file;
        std::istream* in = &std::cin;
        if (path != "-") {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open " + path);
            in = &file;
        }
        std::stringstream buffer;
        buffer << in->rdbuf();
        std::string text = buffer.str();
        std::istringstream probe(text);
        std::string first;
        while (std::getline(probe, first)) {
            const auto pos = first.find_first_not_of(" \t\r");
            if (pos != std::string::npos && first[pos] != '#') {
                first = first.substr(pos);
                break;
            }
            first.clear();
        }
        if (first.rfind("q=", 0) == 0) return parse_edgelist(text);
        std::istringstream g6(text);
        auto graphs = ingest_graph6(g6);
        if (graphs.size() != 1)
            throw std::runtime_error("expected exactly one graph6 line, got " +
                                     std::to_string(graphs.size()));
        return graphs.front();
    }

    ClusteredGraph load_clustered(const GraphInput& shared) const {
        Graph g = load_plain(shared);
        return ClusteredGraph::from_graph(g);
    }
};

std::string format_graph(const ClusteredGraph& g, const std::string& format) {
    if (format == "edgelist") return to_edgelist(g);
    if (format == "graph6") return to_graph6(g) + "\n";
    if (format == "dot") return to_dot(g);
    throw CLI::ValidationError("unknown graph format '" + format + "'");
}

json graph_json(const ClusteredGraph& g) {
    json j;
    j["q"] = g.cluster_size();
    j["graph6"] = to_graph6(g);
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    return j;
}

json poly_json(const QPolynomial& p) {
    json j;
    j["schema"] = 1;
    j["n"] = p.n;
    json coeffs = json::array();
    for (const BigInt& c : p.coeffs) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    return j;
}

std::string ratio_string(const SurveyRow& row) {
    if (!row.pt_computed) return "-";
    const auto [num, den] = row.ratio();
    if (num == 0) return "0";
    if (num == den) return "1";
    return std::to_string(num) + "/" + std::to_string(den);
}

std::ostream& open_out(std::ofstream& file, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") return std::cout;
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open " + out_path);
    return file;
}

json report_json(const GeneratorReport& rep) {
    json j;
    j["schema"] = 1;
    j["family"] = rep.family;
    j["params"] = rep.params;
    j["cospectral"] = rep.cospectral;
    j["isomorphic"] = rep.isomorphic;
    j["graph"] = graph_json(rep.graph);
    j["transpose"] = graph_json(rep.transpose);
    j["q_polynomial"] = q_polynomial(rep.graph).to_string();
    return j;
}

std::vector<IntraEdge> parse_intra_spec(const std::string& spec) {
    // "mu:a-b,mu:a-b"
    std::vector<IntraEdge> out;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        const auto dash = item.find('-', colon + 1);
        if (colon == std::string::npos || dash == std::string::npos)
            throw CLI::ValidationError("expected mu:a-b in '" + item + "'");
        out.push_back({std::stoi(item.substr(0, colon)),
                       std::stoi(item.substr(colon + 1, dash - colon - 1)),
                       std::stoi(item.substr(dash + 1))});
    }
    return out;
}

std::vector<std::pair<int, int>> parse_pair_spec(const std::string& spec) {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : parse_edge_spec(spec)) out.emplace_back(e.u, e.v);
    return out;
}

// Unnormalized variant: "k-l" keeps order (cross edges are directional
// between clusters).
std::vector<std::pair<int, int>> parse_ordered_pairs(const std::string& spec) {
    std::vector<std::pair<int, int>> out;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto dash = item.find('-');
        if (dash == std::string::npos)
            throw CLI::ValidationError("expected k-l in '" + item + "'");
        out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signless-Laplacian cospectral graphs from the partial transpose"};
    app.require_subcommand(1);

    std::string out_path;
    int threads = 0;
    app.add_option("--out", out_path, "output file ('-' = standard output)")->capture_default_str();
    app.add_option("--threads", threads, "worker threads (0 = auto)")->capture_default_str();

    GraphInput input, input2;
    std::string format = "edgelist";
    long long budget_subsets = 10'000'000;

    auto* pt_cmd = app.add_subcommand("pt", "apply the partial transpose");
    input.attach(pt_cmd);
    pt_cmd->add_option("--format", format, "edgelist|graph6|dot|json");

    auto* qpoly_cmd = app.add_subcommand("qpoly", "exact Q-polynomial coefficients");
    input.attach(qpoly_cmd);
    qpoly_cmd->add_option("--format", format, "text|json");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "approximate Q-spectrum (4 decimals)");
    input.attach(spectrum_cmd);
    spectrum_cmd->add_option("--format", format, "text|json");

    auto* tu_cmd = app.add_subcommand("tu-coeffs", "coefficients via the TU-subgraph expansion");
    input.attach(tu_cmd);
    int tu_j = -1;
    tu_cmd->add_option("--j", tu_j, "single coefficient index (default: all)");
    tu_cmd->add_option("--budget-subsets", budget_subsets, "enumeration budget")->capture_default_str();
    tu_cmd->add_option("--format", format, "text|json");

    auto* check_cmd = app.add_subcommand("check-pair", "cospectrality and isomorphism of two graphs");
    input.attach(check_cmd);
    input2.attach(check_cmd, false);
    check_cmd->add_option("--format", format, "text|json");

    auto* psym_cmd = app.add_subcommand("psym", "partial symmetry test / counting");
    input.attach(psym_cmd);
    int psym_count_q = 0;
    bool psym_brute = false;
    psym_cmd->add_option("--count", psym_count_q, "count partially symmetric edge combinations for this q");
    psym_cmd->add_flag("--brute", psym_brute, "count by enumeration instead of the closed form (q <= 4)");

    auto* gen_cmd = app.add_subcommand("generate", "build a family instance and verify it");
    std::string family = "theorem1", base_family;
    int gq = 5, gi = 0, gj = 0, gr = 1;
    std::string diagonals, pairs_spec, cross_spec, intra_spec, attach_spec, attach_vertex_spec,
        attach_targets_spec;
    bool allow_iso_partner = false;
    gen_cmd->add_option("--family", family,
                        "theorem1|corollary1|corollary1-keep|corollary2|procedure1|procedure2|"
                        "procedure3|procedure4|procedure5")->capture_default_str();
    gen_cmd->add_option("--base", base_family, "base family for procedures 2-4 (theorem1|corollary1|corollary2)");
    gen_cmd->add_option("--q", gq, "cluster size")->capture_default_str();
    gen_cmd->add_option("--i", gi, "first distinguished index");
    gen_cmd->add_option("--j", gj, "second distinguished index");
    gen_cmd->add_option("--r", gr, "new vertices per cluster (procedures 4-5)");
    gen_cmd->add_option("--diagonals", diagonals, "comma list of diagonal indices (corollary2)");
    gen_cmd->add_option("--pairs", pairs_spec, "chord pairs k-l,... (procedure2)");
    gen_cmd->add_option("--cross", cross_spec, "cross index pairs k-l,... (procedure3/4/5 new-new)");
    gen_cmd->add_option("--intra", intra_spec, "new intra-cluster edges mu:a-b,... (procedure4/5)");
    gen_cmd->add_option("--attach", attach_spec, "old-new attachments mu:k-t,... (procedure4)");
    gen_cmd->add_option("--attach-vertex", attach_vertex_spec, "mu:k attachment vertex (procedure5)");
    gen_cmd->add_option("--attach-targets", attach_targets_spec, "new indices t1,t2,... (procedure5)");
    gen_cmd->add_flag("--allow-isomorphic-partner", allow_iso_partner,
                      "procedure1: accept a partner merely isomorphic to its transpose");
    gen_cmd->add_option("--format", format, "json|edgelist|graph6|dot");
    input.attach(gen_cmd, true, false);  // generate has its own --q
    input2.attach(gen_cmd, false);

    auto* family_cmd = app.add_subcommand("family-count", "reported family size (unverified claim)");
    std::string fc_family = "theorem1";
    int fc_q = 5;
    family_cmd->add_option("--family", fc_family, "theorem1|corollary1|procedure2|procedure3")
        ->capture_default_str();
    family_cmd->add_option("--q", fc_q, "cluster size")->capture_default_str();

    auto* survey_cmd = app.add_subcommand("survey", "cospectral classes and PT-realizability table");
    int survey_n = 6;
    int max_pt_edges = 1 << 30;
    bool check_baseline = false;
    std::string survey_input;
    survey_cmd->add_option("--n", survey_n, "vertex count (built-in enumeration, n <= 8)")
        ->capture_default_str();
    survey_cmd->add_option("--max-pt-edges", max_pt_edges,
                           "skip the labelling search above this edge count");
    long long budget_perms = 10'000'000;
    bool dump_classes = false;
    survey_cmd->add_option("--budget-perms", budget_perms,
                           "labelling-search budget per graph")->capture_default_str();
    survey_cmd->add_flag("--classes", dump_classes,
                         "also dump every nontrivial class (graph6, canonical hex, polynomial)");
    survey_cmd->add_option("--input", survey_input, "graph6 file with one representative per class");
    survey_cmd->add_flag("--check-baseline", check_baseline,
                         "compare with the published baseline; nonzero exit on non-suspect mismatch");
    survey_cmd->add_option("--format", format, "tsv|json");

    auto* fixtures_cmd = app.add_subcommand("fixtures", "run the pinned regression pairs");
    fixtures_cmd->add_option("--format", format, "tsv|json");

    auto* sample_cmd = app.add_subcommand("sample", "seeded instances of the growth procedures");
    int sample_procedure = 1, sample_count = 20;
    unsigned sample_seed = 1;
    sample_cmd->add_option("--procedure", sample_procedure, "1..5")->capture_default_str();
    sample_cmd->add_option("--count", sample_count, "instances to draw")->capture_default_str();
    sample_cmd->add_option("--seed", sample_seed, "sampler seed")->capture_default_str();
    sample_cmd->add_option("--format", format, "tsv|json");

    // global options (--out, --threads) may follow the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        std::ofstream out_file;
        std::ostream& out = open_out(out_file, out_path);

        if (pt_cmd->parsed()) {
            const ClusteredGraph g = input.load_clustered(input);
            const ClusteredGraph t = partial_transpose(g);
            if (format == "json") {
                json j;
                j["schema"] = 1;
                j["graph"] = graph_json(g);
                j["transpose"] = graph_json(t);
                out << j.dump(2) << "\n";
            } else {
                out << format_graph(t, format);
            }
        } else if (qpoly_cmd->parsed()) {
            const Graph g = input.load_plain(input);
            const QPolynomial p = q_polynomial(g);
            if (format == "json")
                out << poly_json(p).dump(2) << "\n";
            else
                out << p.to_string() << "\n";
        } else if (spectrum_cmd->parsed()) {
            const Graph g = input.load_plain(input);
            const auto spec = q_spectrum(g);
            if (format == "json") {
                json j;
                j["schema"] = 1;
                json vals = json::array();
                for (double v : spec) vals.push_back(v);
                j["eigenvalues"] = vals;
                out << j.dump(2) << "\n";
            } else {
                out << std::fixed << std::setprecision(4);
                for (std::size_t i = 0; i < spec.size(); ++i)
                    out << (i ? " " : "") << spec[i];
                out << "\n";
            }
        } else if (tu_cmd->parsed()) {
            const Graph g = input.load_plain(input);
            const TuBudget budget{budget_subsets};
            if (tu_j >= 0) {
                const BigInt p = coefficient_via_tu(g, tu_j, budget);
                const auto expansion = tu_expansion(g, budget);
                if (format == "json") {
                    json j;
                    j["schema"] = 1;
                    j["j"] = tu_j;
                    j["p_j"] = p.str();
                    j["count"] = expansion.counts[tu_j];
                    out << j.dump(2) << "\n";
                } else {
                    out << "p_" << tu_j << " = " << p << " (" << expansion.counts[tu_j]
                        << " TU subgraphs)\n";
                }
            } else {
                const auto expansion = tu_expansion(g, budget);
                if (format == "json") {
                    json j;
                    j["schema"] = 1;
                    json rows = json::array();
                    for (int jj = 0; jj <= expansion.poly.n; ++jj)
                        rows.push_back({{"j", jj},
                                        {"p_j", expansion.poly.coeffs[jj].str()},
                                        {"count", expansion.counts[jj]}});
                    j["coefficients"] = rows;
                    out << j.dump(2) << "\n";
                } else {
                    out << expansion.poly.to_string() << "\n";
                }
            }
        } else if (check_cmd->parsed()) {
            const Graph a = input.load_plain(input);
            const Graph b = input2.load_plain(input);
            const bool cosp = are_q_cospectral(a, b);
            const bool iso = are_isomorphic(a, b);
            if (format == "json") {
                json j;
                j["schema"] = 1;
                j["cospectral"] = cosp;
                j["isomorphic"] = iso;
                out << j.dump(2) << "\n";
            } else {
                out << "cospectral=" << (cosp ? "true" : "false")
                    << " isomorphic=" << (iso ? "true" : "false") << "\n";
            }
        } else if (psym_cmd->parsed()) {
            if (psym_count_q > 0) {
                const BigInt c = psym_brute ? brute_count_partially_symmetric(psym_count_q)
                                            : count_partially_symmetric(psym_count_q);
                out << c << "\n";
            } else {
                const ClusteredGraph g = input.load_clustered(input);
                out << (is_partially_symmetric(g) ? "true" : "false") << "\n";
            }
        } else if (gen_cmd->parsed()) {
            auto build_base = [&](const std::string& fam) -> GeneratorReport {
                if (fam == "theorem1") return theorem1_graph(gq, gi ? gi : 2, gj ? gj : 4);
                if (fam == "corollary1") return corollary1_graph(gq, gi ? gi : 1);
                if (fam == "corollary1-keep") return corollary1_keep_edge(gq, gi ? gi : 1);
                if (fam == "corollary2") {
                    std::set<int> diag;
                    std::istringstream in(diagonals);
                    std::string item;
                    while (std::getline(in, item, ','))
                        if (!item.empty()) diag.insert(std::stoi(item));
                    return corollary2_graph(gq, diag);
                }
                throw CLI::ValidationError("unknown base family '" + fam + "'");
            };
            GeneratorReport rep;
            if (family == "procedure1") {
                GraphInput shared = input;
                shared.q = gq;
                const ClusteredGraph g = input.load_clustered(shared);
                const ClusteredGraph partner = input2.load_clustered(shared);
                rep = procedure1_union(g, partner, allow_iso_partner);
            } else if (family == "procedure2") {
                rep = procedure2_add_pairs(build_base(base_family.empty() ? "theorem1" : base_family),
                                           parse_pair_spec(pairs_spec));
            } else if (family == "procedure3") {
                rep = procedure3_add_psym_cross(
                    build_base(base_family.empty() ? "theorem1" : base_family),
                    parse_ordered_pairs(cross_spec));
            } else if (family == "procedure4") {
                rep = procedure4_extend(build_base(base_family.empty() ? "corollary1" : base_family),
                                        gr, parse_intra_spec(intra_spec), parse_intra_spec(attach_spec),
                                        parse_ordered_pairs(cross_spec));
            } else if (family == "procedure5") {
                GraphInput shared = input;
                shared.q = gq;
                const ClusteredGraph g0 = input.load_clustered(shared);
                const auto colon = attach_vertex_spec.find(':');
                if (colon == std::string::npos)
                    throw CLI::ValidationError("--attach-vertex needs mu:k");
                const std::pair<int, int> av{std::stoi(attach_vertex_spec.substr(0, colon)),
                                             std::stoi(attach_vertex_spec.substr(colon + 1))};
                std::vector<int> targets;
                std::istringstream in(attach_targets_spec);
                std::string item;
                while (std::getline(in, item, ','))
                    if (!item.empty()) targets.push_back(std::stoi(item));
                rep = procedure5_extend(g0, gr, parse_intra_spec(intra_spec), av, targets,
                                        parse_ordered_pairs(cross_spec));
            } else {
                rep = build_base(family);
            }
            if (format == "edgelist" || format == "graph6" || format == "dot") {
                out << format_graph(rep.graph, format);
                out << format_graph(rep.transpose, format);
                out << "# family=" << rep.family << " params=\"" << rep.params << "\""
                    << " cospectral=" << (rep.cospectral ? "true" : "false")
                    << " isomorphic=" << (rep.isomorphic ? "true" : "false") << "\n";
            } else {
                out << report_json(rep).dump(2) << "\n";
            }
        } else if (family_cmd->parsed()) {
            out << family_count(fc_family, fc_q) << " (reported count, unverified)\n";
        } else if (survey_cmd->parsed()) {
            SurveyOptions opts;
            opts.max_pt_edges = max_pt_edges;
            opts.max_assignments = budget_perms;
            opts.threads = threads;
            std::vector<Graph> graphs;
            if (!survey_input.empty()) {
                std::ifstream in(survey_input);
                if (!in) throw std::runtime_error("cannot open " + survey_input);
                graphs = ingest_graph6(in);
                if (graphs.empty()) throw std::runtime_error("no graphs in " + survey_input);
            } else {
                graphs = enumerate_graphs(survey_n);
            }
            const int table_n = graphs.front().vertex_count();
            const auto rows = survey_table_for(graphs, table_n, opts);
            if (format == "json") {
                json j;
                j["schema"] = 1;
                json jr = json::array();
                for (const auto& r : rows) {
                    json row;
                    row["n"] = r.n;
                    row["m"] = r.m;
                    row["cospectral"] = r.cospectral_count;
                    if (r.pt_computed) {
                        row["pt"] = r.pt_count;
                        row["ratio"] = ratio_string(r);
                    } else {
                        row["pt"] = nullptr;
                        row["ratio"] = nullptr;
                    }
                    jr.push_back(row);
                }
                j["rows"] = jr;
                out << j.dump(2) << "\n";
            } else {
                out << "n\tm\tcospectral\tpt\tratio\n";
                for (const auto& r : rows)
                    out << r.n << "\t" << r.m << "\t" << r.cospectral_count << "\t"
                        << (r.pt_computed ? std::to_string(r.pt_count) : "-") << "\t"
                        << ratio_string(r) << "\n";
            }
            if (dump_classes) {
                const auto classes = cospectral_classes(graphs);
                if (format == "json") {
                    json j;
                    j["schema"] = 1;
                    json jc = json::array();
                    for (const auto& cls : classes) {
                        json members = json::array();
                        for (std::size_t k = 0; k < cls.members.size(); ++k)
                            members.push_back({{"graph6", to_graph6(cls.members[k])},
                                               {"canonical", cls.canonical[k].hex()}});
                        jc.push_back({{"m", cls.edge_count()},
                                      {"polynomial", cls.poly.to_string()},
                                      {"members", members}});
                    }
                    j["classes"] = jc;
                    out << j.dump(2) << "\n";
                } else {
                    for (const auto& cls : classes) {
                        out << "# class m=" << cls.edge_count() << " poly: "
                            << cls.poly.to_string() << "\n";
                        for (std::size_t k = 0; k < cls.members.size(); ++k)
                            out << to_graph6(cls.members[k]) << "\t"
                                << cls.canonical[k].hex() << "\n";
                    }
                }
            }
            if (check_baseline) {
                int bad = 0;
                for (const BaselineRow& base : baseline_rows()) {
                    if (base.n != rows.front().n) continue;
                    const SurveyRow* found = nullptr;
                    for (const auto& r : rows)
                        if (r.m == base.m) found = &r;
                    std::ostringstream note;
                    if (!found) {
                        note << "baseline row m=" << base.m << " missing from computed table";
                    } else if (found->pt_computed &&
                               (found->cospectral_count != base.cospectral_count ||
                                found->pt_count != base.pt_count)) {
                        note << "m=" << base.m << ": computed " << found->cospectral_count << "/"
                             << found->pt_count << " vs baseline " << base.cospectral_count << "/"
                             << base.pt_count;
                    }
                    if (!note.str().empty()) {
                        if (base.counts_suspect) {
                            out << "# baseline-discrepancy (suspect row): " << note.str() << "\n";
                        } else {
                            out << "# BASELINE MISMATCH: " << note.str() << "\n";
                            ++bad;
                        }
                    } else if (base.ratio_suspect && found) {
                        out << "# baseline ratio anomaly at m=" << base.m << ": computed "
                            << ratio_string(*found) << ", published 0\n";
                    }
                }
                for (const auto& r : rows) {
                    bool in_baseline = false;
                    for (const BaselineRow& base : baseline_rows())
                        if (base.n == r.n && base.m == r.m) in_baseline = true;
                    if (!in_baseline && r.pt_computed)
                        out << "# not in baseline: m=" << r.m << " (" << r.cospectral_count << "/"
                            << r.pt_count << ")\n";
                }
                if (bad) return kExitMismatch;
            }
        } else if (fixtures_cmd->parsed()) {
            const auto cases = fixture_suite();
            bool all_ok = true;
            if (format == "json") {
                json j;
                j["schema"] = 1;
                json jc = json::array();
                for (const auto& c : cases) {
                    jc.push_back({{"name", c.name},
                                  {"n", c.report.graph.vertex_count()},
                                  {"m", c.report.graph.edge_count()},
                                  {"cospectral", c.report.cospectral},
                                  {"isomorphic", c.report.isomorphic},
                                  {"expect_pair", c.expect_pair},
                                  {"ok", c.ok()}});
                    all_ok = all_ok && c.ok();
                }
                j["cases"] = jc;
                j["ok"] = all_ok;
                out << j.dump(2) << "\n";
            } else {
                out << "name\tn\tm\tcospectral\tisomorphic\texpect_pair\tok\n";
                for (const auto& c : cases) {
                    out << c.name << "\t" << c.report.graph.vertex_count() << "\t"
                        << c.report.graph.edge_count() << "\t" << c.report.cospectral << "\t"
                        << c.report.isomorphic << "\t" << c.expect_pair << "\t" << c.ok() << "\n";
                    all_ok = all_ok && c.ok();
                }
            }
            if (!all_ok) return kExitMismatch;
        } else if (sample_cmd->parsed()) {
            const auto reports =
                sample_procedure_instances(sample_procedure, sample_count, sample_seed);
            if (format == "json") {
                json j;
                j["schema"] = 1;
                json jr = json::array();
                for (const auto& rep : reports)
                    jr.push_back({{"family", rep.family},
                                  {"params", rep.params},
                                  {"n", rep.graph.vertex_count()},
                                  {"m", rep.graph.edge_count()},
                                  {"cospectral", rep.cospectral},
                                  {"isomorphic", rep.isomorphic}});
                j["instances"] = jr;
                out << j.dump(2) << "\n";
            } else {
                out << "family\tparams\tn\tm\tcospectral\tisomorphic\n";
                for (const auto& rep : reports)
                    out << rep.family << "\t" << rep.params << "\t"
                        << rep.graph.vertex_count() << "\t" << rep.graph.edge_count() << "\t"
                        << rep.cospectral << "\t" << rep.isomorphic << "\n";
            }
        }
        return 0;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
