#include <doctest.h>

#include <algorithm>

#include "oldset/edge_list.hpp"
#include "oldset/enumerate.hpp"
#include "oldset/forcing.hpp"
#include "oldset/old_solver.hpp"

using namespace oldset;

namespace {

Digraph worked_example() {
    return parse_edge_list("4\n1 0\n0 2\n2 1\n3 3\n0 1\n0 3\n0 0\n2 0\n");
}

Digraph symmetric_triangle() {
    return Digraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
}

}  // namespace

TEST_CASE("forced-vertex classification") {
    const ForcedReport four_cycle = forced_report(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    for (int v = 0; v < 4; ++v) {
        CHECK(four_cycle.vertices[v].domination_forced());
        CHECK_FALSE(four_cycle.vertices[v].location_forced());
    }

    const ForcedReport fig = forced_report(worked_example());
    CHECK(fig.domination_forced_set() == VertexSet(4, {0}));
    CHECK(fig.location_forced_set() == VertexSet(4, {1, 2, 3}));
    CHECK(fig.vertices[0].domination_witness == 2);
    CHECK(fig.vertices[1].location_witnesses == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(fig.vertices[2].location_witnesses == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(fig.vertices[3].location_witnesses == std::vector<std::pair<int, int>>{{2, 3}});
    CHECK_FALSE(fig.any_double_forced());

    const ForcedReport triangle = forced_report(symmetric_triangle());
    CHECK(triangle.forced_set().empty());
}

TEST_CASE("forcing arcs") {
    CHECK(forcing_arcs(worked_example()) ==
          std::vector<Arc>{{0, 2}, {1, 0}, {2, 1}, {3, 3}});

    CHECK(forcing_arcs(symmetric_triangle()).empty());

    // Loop at 0 plus the arc 0 -> 1 and loop at 1: both loops force, the
    // plain arc does not.
    const Digraph arc_with_loops(2, {{0, 0}, {0, 1}, {1, 1}});
    CHECK(forcing_arcs(arc_with_loops) == std::vector<Arc>{{0, 0}, {1, 1}});
}

TEST_CASE("forcing tails are exactly the forced vertices") {
    for (int n = 1; n <= 4; ++n) {
        const LabelledDigraphFamily family = labelled_digraphs(n);
        for (std::uint64_t i = 0; i < family.size(); ++i) {
            const Digraph d = family.at(i);
            VertexSet tails(n);
            for (const auto& [x, y] : forcing_arcs(d)) tails.add(x);
            CHECK(tails == forced_report(d).forced_set());
        }
    }
}

TEST_CASE("forcing decomposition") {
    const ForcingDecomposition fig = forcing_decomposition(worked_example());
    CHECK(fig.spans_cycles);
    CHECK(fig.cycles == std::vector<std::vector<int>>{{0, 2, 1}, {3}});
    CHECK(fig.f_plus == std::vector<int>{2, 0, 1, 3});
    CHECK(fig.f_minus == std::vector<int>{1, 2, 0, 3});

    CHECK_FALSE(forcing_decomposition(symmetric_triangle()).spans_cycles);
    CHECK_FALSE(is_extremal_structural(symmetric_triangle()));
    CHECK(is_extremal_structural(worked_example()));

    // A sink (or source) rules the spanning cycles out.
    CHECK_FALSE(is_extremal_structural(Digraph(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST_CASE("stripping non-forcing arcs") {
    const Digraph fig = worked_example();

    const Digraph stripped = strip_non_forcing_arcs(fig, 0);
    CHECK(stripped.arcs() == std::vector<Arc>{{0, 2}, {1, 0}, {2, 0}, {2, 1}, {3, 3}});
    CHECK(is_locatable(stripped));
    CHECK(is_extremal(stripped));

    // A vertex with no outgoing non-forcing arcs changes nothing.
    CHECK(strip_non_forcing_arcs(fig, 1) == fig);

    Digraph bare = fig;
    for (int x = 0; x < 4; ++x) bare = strip_non_forcing_arcs(bare, x);
    CHECK(bare.arcs() == forcing_arcs(fig));
}

TEST_CASE("auxiliary forest") {
    const HForest fig = build_h_digraph(worked_example());
    CHECK(fig.is_forest);
    CHECK(fig.arcs == std::vector<Arc>{{1, 0}, {2, 1}, {2, 3}});
    CHECK(fig.roots == VertexSet(4, {2}));
    CHECK(fig.parent == std::vector<int>{1, 2, -1, 2});

    const HForest cycle = build_h_digraph(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK(cycle.arcs.empty());
    CHECK(cycle.roots == VertexSet::full(4));

    // Loop-closed transitive closure of the path 0 -> 1 -> 2: the forest is a
    // subdigraph of the digraph itself.
    const Digraph tc(3, {{0, 1}, {0, 2}, {1, 2}, {0, 0}, {1, 1}, {2, 2}});
    const HForest h = build_h_digraph(tc);
    CHECK(h.arcs == std::vector<Arc>{{0, 1}, {1, 2}});
    for (const auto& [x, y] : h.arcs) CHECK(tc.has_arc(x, y));
}

TEST_CASE("exhaustive structural properties at order three") {
    const LabelledDigraphFamily family = labelled_digraphs(3);
    for (std::uint64_t i = 0; i < family.size(); ++i) {
        const Digraph d = family.at(i);
        const bool locatable = is_locatable(d);
        const bool extremal = locatable && is_extremal(d);
        CHECK((is_extremal_structural(d) && locatable) == extremal);
        if (!locatable) continue;
        const ForcedReport rep = forced_report(d);
        CHECK(rep.location_forced_set().size() <= d.order() - 1);
        if (extremal) {
            CHECK_FALSE(rep.any_double_forced());
            const ForcingDecomposition fd = forcing_decomposition(d);
            std::vector<int> out_deg(3, 0), in_deg(3, 0);
            for (const auto& [x, y] : fd.arcs) {
                ++out_deg[x];
                ++in_deg[y];
            }
            for (int v = 0; v < 3; ++v) {
                CHECK(out_deg[v] == 1);
                CHECK(in_deg[v] == 1);
            }
        }
    }
}
