#include <doctest.h>

#include "oldset/edge_list.hpp"
#include "oldset/enumerate.hpp"
#include "oldset/forcing.hpp"
#include "oldset/trees.hpp"

using namespace oldset;

TEST_CASE("parse basics") {
    const Digraph loop = parse_edge_list("1\n0 0\n");
    CHECK(loop.order() == 1);
    CHECK(loop.has_loop(0));

    const Digraph fig = parse_edge_list("4\n1 0\n0 2\n2 1\n3 3\n0 1\n0 3\n0 0\n2 0\n");
    CHECK(fig.order() == 4);
    CHECK(fig.arc_count() == 8);
    CHECK(fig.has_arc(1, 0));
    CHECK(fig.has_arc(2, 0));

    const Digraph commented = parse_edge_list("# header\n 2 # order\n\n0 1 # an arc\n");
    CHECK(commented.arc_count() == 1);
}

TEST_CASE("parse diagnostics carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list("2\n0 1\n0 1\n"),
                         "line 3: duplicate arc 0 -> 1", ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2\n0 5\n"),
                         "line 2: vertex out of range 0..1", ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2\n0\n"),
                         "line 2: expected an arc as \"u v\"", ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("x\n"),
                         "line 1: expected the vertex count", ParseError);
    CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1\n0 0\n0 0 0\n"), ParseError);
}

TEST_CASE("emit then parse is the identity on arcs") {
    const LabelledDigraphFamily family = labelled_digraphs(3);
    for (std::uint64_t i = 0; i < family.size(); i += 7) {
        const Digraph d = family.at(i);
        CHECK(parse_edge_list(emit_edge_list(d)) == d);
    }
}

TEST_CASE("emit then parse round-trips every catalog member") {
    for (const auto& cat : oracle_tree_catalogs(4))
        for (const auto& m : cat.members)
            CHECK(parse_edge_list(emit_edge_list(m.digraph)) == m.digraph);
    for (const auto& cat : enumerate_tree_catalogs(5))
        for (const auto& m : cat.members)
            CHECK(parse_edge_list(emit_edge_list(m.digraph)) == m.digraph);
}

TEST_CASE("dot export carries the annotation styles") {
    const Digraph fig = parse_edge_list("4\n1 0\n0 2\n2 1\n3 3\n0 1\n0 3\n0 0\n2 0\n");
    DotAnnotations ann;
    ann.forcing_arcs = forcing_arcs(fig);
    ann.domination_forced = forced_report(fig).domination_forced_set();
    const std::string dot = to_dot(fig, &ann);
    CHECK(dot.find("digraph D {") == 0);
    CHECK(dot.find("0 [shape=box];") != std::string::npos);     // domination-forced
    CHECK(dot.find("1 [shape=box]") == std::string::npos);      // location-forced stays a circle
    CHECK(dot.find("3 -> 3 [style=dashed];") != std::string::npos);  // forcing loop
    CHECK(dot.find("0 -> 1 [style=dashed]") == std::string::npos);   // plain arc
}
