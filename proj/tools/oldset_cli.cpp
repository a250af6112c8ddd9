// Command-line front end: analysis, exact solving, generators, the tree
// catalog, the verification harness and DOT figure output.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oldset/canonical.hpp"
#include "oldset/construct.hpp"
#include "oldset/edge_list.hpp"
#include "oldset/figures.hpp"
#include "oldset/forcing.hpp"
#include "oldset/old_solver.hpp"
#include "oldset/trees.hpp"
#include "oldset/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

std::string flag(bool b) { return b ? "yes" : "no"; }

void print_analysis(const oldset::Digraph& d) {
    using namespace oldset;
    const StructureFlags flags = classify(d);
    std::cout << "vertices: " << d.order() << "\n";
    std::cout << "arcs: " << d.arc_count() << "\n";
    std::cout << "flags: symmetric=" << flag(flags.symmetric) << " reflexive="
              << flag(flags.reflexive) << " loop-free=" << flag(flags.loop_free)
              << " oriented=" << flag(flags.oriented)
              << " connected=" << flag(flags.connected_underlying)
              << " source=" << flag(flags.source_exists) << " sink=" << flag(flags.sink_exists)
              << "\n";

    const OldResult result = min_old_set(d);
    std::cout << "locatable: " << flag(result.locatable) << "\n";
    if (result.locatable) {
        std::cout << "gamma_OL: " << *result.gamma
                  << (*result.gamma == d.order() ? " (extremal)" : "") << "\n";
        std::cout << "witness: " << result.witness->to_string() << "\n";
    }

    const ForcedReport rep = forced_report(d);
    std::cout << "forced vertices:\n";
    for (int v = 0; v < d.order(); ++v) {
        const ForcedVertex& fv = rep.vertices[v];
        std::cout << "  " << v << ":";
        if (!fv.forced()) std::cout << " not forced";
        if (fv.domination_forced())
            std::cout << " domination-forced (unique in-neighbour of " << *fv.domination_witness
                      << ")";
        if (fv.location_forced()) {
            std::cout << " location-forced (pairs:";
            for (const auto& [x, y] : fv.location_witnesses)
                std::cout << " {" << x << "," << y << "}";
            std::cout << ")";
        }
        if (fv.double_forced()) std::cout << " [double-forced]";
        std::cout << "\n";
    }

    const ForcingDecomposition fd = forcing_decomposition(d);
    std::cout << "forcing arcs:";
    for (const auto& [x, y] : fd.arcs) std::cout << " " << x << "->" << y;
    std::cout << "\n";
    if (fd.spans_cycles) {
        std::cout << "forcing cycles:";
        for (const auto& cycle : fd.cycles) {
            std::cout << " (";
            for (std::size_t i = 0; i < cycle.size(); ++i)
                std::cout << (i ? " " : "") << cycle[i];
            std::cout << ")";
        }
        std::cout << "\n";
    } else {
        std::cout << "forcing cycles: none (forcing arcs do not span disjoint cycles)\n";
    }

    const HForest h = build_h_digraph(d);
    std::cout << "H(D): roots=" << h.roots.to_string() << " arcs:";
    for (const auto& [x, y] : h.arcs) std::cout << " " << x << "->" << y;
    std::cout << " forest=" << flag(h.is_forest) << "\n";
}

// Comma-separated parents; the root is marked "r" (or "-1", which needs a
// "--" separator on the command line).
std::vector<int> parse_parent_list(const std::string& text) {
    std::vector<int> parents;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item == "r" || item == "R") {
            parents.push_back(-1);
            continue;
        }
        try {
            parents.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad parent list entry \"" + item + "\"");
        }
    }
    if (parents.empty()) throw std::invalid_argument("empty parent list");
    return parents;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace oldset;

    CLI::App app{"open-neighbourhood locating-domination analysis on digraphs with loops"};
    app.require_subcommand(1);
    int exit_code = exit_ok;

    std::string path;
    bool dot = false;
    auto* analyze = app.add_subcommand("analyze", "full forcing analysis of an edge-list file");
    analyze->add_option("file", path, "edge-list file")->required();
    analyze->add_flag("--dot", dot, "emit annotated DOT instead of text");
    analyze->callback([&] {
        const Digraph d = read_edge_list_file(path);
        if (dot) {
            DotAnnotations ann;
            ann.forcing_arcs = forcing_arcs(d);
            ann.domination_forced = forced_report(d).domination_forced_set();
            std::cout << to_dot(d, &ann);
        } else {
            print_analysis(d);
        }
    });

    auto* min_old = app.add_subcommand("min-old", "exact OLD number with a witness");
    min_old->add_option("file", path, "edge-list file")->required();
    min_old->callback([&] {
        const OldResult r = min_old_set(read_edge_list_file(path));
        if (!r.locatable) {
            std::cout << "NOT LOCATABLE\n";
            return;
        }
        std::cout << "gamma_OL: " << *r.gamma << "\n";
        std::cout << "witness: " << r.witness->to_string() << "\n";
    });

    auto* extremal = app.add_subcommand("extremal", "is gamma_OL equal to the order?");
    extremal->add_option("file", path, "edge-list file")->required();
    extremal->callback([&] {
        std::cout << (is_extremal(read_edge_list_file(path)) ? "YES" : "NO") << "\n";
    });

    auto* gen = app.add_subcommand("gen", "generators; all emit edge-list format");
    gen->require_subcommand(1);

    std::string blueprint_path;
    auto* gen_blueprint = gen->add_subcommand("blueprint", "build a digraph from a blueprint file");
    gen_blueprint->add_option("file", blueprint_path, "blueprint file")->required();
    gen_blueprint->callback([&] {
        std::ifstream in(blueprint_path);
        if (!in) throw std::runtime_error("cannot open file: " + blueprint_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        const ExtremalBlueprint b = parse_blueprint(buf.str());
        const auto validation = validate_blueprint(b);
        if (!validation.valid()) {
            for (const auto& problem : validation.problems)
                std::cerr << "invalid blueprint: " << problem << "\n";
            exit_code = exit_usage;
            return;
        }
        std::cout << emit_edge_list(construct_from_blueprint(b));
    });

    int half_k = 0;
    auto* gen_half = gen->add_subcommand("half-graph", "symmetric realization of H_k");
    gen_half->add_option("k", half_k, "half-graph index")->required();
    gen_half->callback([&] { std::cout << emit_edge_list(build_half_graph_digraph(half_k)); });

    std::string parent_list;
    bool with_loops = false;
    auto* gen_tc = gen->add_subcommand(
        "tc-tree", "transitive closure of a rooted directed tree (parents as \"r,0,0,...\")");
    gen_tc->add_option("parent-list", parent_list, "comma-separated parents, r for the root")
        ->required();
    gen_tc->add_flag("--loops", with_loops, "add a loop at every vertex");
    gen_tc->callback([&] {
        std::cout << emit_edge_list(build_tc_rooted_tree(parse_parent_list(parent_list), with_loops));
    });

    int cycle_n = 0;
    auto* gen_cycle = gen->add_subcommand("cycle", "directed cycle");
    gen_cycle->add_option("n", cycle_n, "order")->required();
    gen_cycle->callback([&] { std::cout << emit_edge_list(build_directed_cycle(cycle_n)); });

    int tree_order = 0;
    bool labelled = false, provenance = false;
    std::string dot_dir;
    auto* enum_trees =
        app.add_subcommand("enum-trees", "extremal digraphs whose underlying graph is a tree");
    enum_trees->add_option("n", tree_order, "maximum order")->required();
    enum_trees->add_flag("--labelled", labelled, "also print labelled counts");
    enum_trees->add_flag("--provenance", provenance, "print the producing rule per member");
    enum_trees->add_option("--dot-dir", dot_dir, "write one DOT file per member");
    enum_trees->callback([&] {
        const auto catalogs = enumerate_tree_catalogs(tree_order);
        for (const TreeCatalog& cat : catalogs) {
            std::cout << "n=" << cat.order << ": " << cat.members.size() << " members";
            if (labelled) std::cout << " (" << cat.labelled_count << " labelled)";
            std::cout << "\n";
            for (std::size_t i = 0; i < cat.members.size(); ++i) {
                const auto& m = cat.members[i];
                std::cout << "  member " << i + 1 << ": " << compact_edge_list(m.digraph);
                if (provenance) std::cout << "   [" << m.provenance << "]";
                std::cout << "\n";
            }
        }
        if (!dot_dir.empty()) {
            std::filesystem::create_directories(dot_dir);
            for (const TreeCatalog& cat : catalogs) {
                for (std::size_t i = 0; i < cat.members.size(); ++i) {
                    const Digraph& d = cat.members[i].digraph;
                    DotAnnotations ann;
                    ann.forcing_arcs = forcing_arcs(d);
                    ann.domination_forced = forced_report(d).domination_forced_set();
                    const std::string name =
                        "trees_n" + std::to_string(cat.order) + "_" + std::to_string(i + 1);
                    std::ofstream out(std::filesystem::path(dot_dir) / (name + ".dot"));
                    out << to_dot(d, &ann, name);
                }
            }
        }
    });

    std::string claim;
    int max_n = 0, workers = 0;
    auto* verify = app.add_subcommand("verify", "run one claim scan (or ALL)");
    verify->add_option("claim", claim, "claim identifier, see --list")->required();
    verify->add_option("--max-n", max_n, "override the claim's default order cap");
    verify->add_option("--workers", workers, "worker threads (default: OLDSET_WORKERS or 1)");
    verify->callback([&] {
        VerifyOptions options;
        if (max_n > 0) options.max_n = max_n;
        options.workers = workers;
        std::vector<std::string> todo;
        if (claim == "ALL")
            todo = claim_names();
        else
            todo.push_back(claim);
        for (const auto& name : todo) {
            const VerificationReport report =
                verify_claim(name, claim == "ALL" ? VerifyOptions{std::nullopt, workers} : options);
            std::cout << format_report(report);
            if (!report.verified()) exit_code = exit_counterexample;
        }
    });

    std::string figures_dir;
    auto* figures = app.add_subcommand("figures", "write the catalog DOT files");
    figures->add_option("dir", figures_dir, "output directory")->required();
    figures->callback([&] {
        for (const auto& file : write_figures(figures_dir)) std::cout << file << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_code;
}
