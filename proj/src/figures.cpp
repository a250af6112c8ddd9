#include "oldset/figures.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "oldset/construct.hpp"
#include "oldset/edge_list.hpp"
#include "oldset/forcing.hpp"
#include "oldset/trees.hpp"

namespace oldset {

namespace {

void write_file(std::vector<std::string>& written, const std::filesystem::path& path,
                const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    written.push_back(path.string());
}

std::string annotated_dot(const Digraph& d, std::string_view name) {
    DotAnnotations ann;
    ann.forcing_arcs = forcing_arcs(d);
    ann.domination_forced = forced_report(d).domination_forced_set();
    return to_dot(d, &ann, name);
}

}  // namespace

std::vector<std::string> write_figures(const std::string& directory) {
    namespace fs = std::filesystem;
    const fs::path dir(directory);
    fs::create_directories(dir);
    std::vector<std::string> written;

    // The four connected locatable digraphs of order 1 and 2.
    const std::vector<Digraph> small = {
        Digraph(1, {{0, 0}}),
        Digraph(2, {{0, 1}, {1, 0}}),
        Digraph(2, {{0, 1}, {1, 0}, {0, 0}}),
        Digraph(2, {{0, 1}, {0, 0}, {1, 1}}),
    };
    for (std::size_t i = 0; i < small.size(); ++i)
        write_file(written, dir / ("order12-" + std::to_string(i + 1) + ".dot"),
                   annotated_dot(small[i], "order12_" + std::to_string(i + 1)));

    // The two order-3 pendant-path digraphs.
    const Digraph pendant_a(3, {{2, 2}, {0, 1}, {1, 0}, {1, 1}, {1, 2}});
    const Digraph pendant_b(3, {{2, 2}, {0, 1}, {1, 0}, {1, 2}});
    write_file(written, dir / "pendant-a.dot", annotated_dot(pendant_a, "pendant_a"));
    write_file(written, dir / "pendant-b.dot", annotated_dot(pendant_b, "pendant_b"));

    // Worked construction example, three panels.
    ExtremalBlueprint blueprint;
    blueprint.n = 4;
    blueprint.f_plus = {2, 0, 1, 3};
    blueprint.v_d = VertexSet(4, {0});
    blueprint.h_parent = {1, 2, -1, 2};
    const Digraph final_digraph = construct_from_blueprint(blueprint);

    Digraph forcing_only(4);
    for (int v = 0; v < 4; ++v) forcing_only.add_arc(v, blueprint.f_plus[v]);
    DotAnnotations forcing_ann;
    forcing_ann.forcing_arcs = forcing_only.arcs();
    forcing_ann.domination_forced = blueprint.v_d;
    write_file(written, dir / "construct-forcing.dot",
               to_dot(forcing_only, &forcing_ann, "construct_forcing"));

    Digraph h_forest(4);
    for (int v = 0; v < 4; ++v)
        if (blueprint.h_parent[v] != -1) h_forest.add_arc(blueprint.h_parent[v], v);
    DotAnnotations h_ann;
    h_ann.domination_forced = blueprint.v_d;
    write_file(written, dir / "construct-hforest.dot", to_dot(h_forest, &h_ann, "construct_h"));

    write_file(written, dir / "construct-final.dot",
               annotated_dot(final_digraph, "construct_final"));

    // The tree catalog up to order 4.
    for (const TreeCatalog& cat : enumerate_tree_catalogs(4)) {
        for (std::size_t i = 0; i < cat.members.size(); ++i) {
            const std::string stem =
                "smalltrees-n" + std::to_string(cat.order) + "-" + std::to_string(i + 1);
            const std::string graph_name =
                "smalltrees_n" + std::to_string(cat.order) + "_" + std::to_string(i + 1);
            write_file(written, dir / (stem + ".dot"),
                       annotated_dot(cat.members[i].digraph, graph_name));
        }
    }
    return written;
}

}  // namespace oldset
