#include <doctest.h>

#include <map>
#include <set>

#include "oldset/canonical.hpp"
#include "oldset/construct.hpp"
#include "oldset/edge_list.hpp"
#include "oldset/enumerate.hpp"
#include "oldset/forcing.hpp"
#include "oldset/old_solver.hpp"

using namespace oldset;

namespace {

ExtremalBlueprint worked_blueprint() {
    ExtremalBlueprint b;
    b.n = 4;
    b.f_plus = {2, 0, 1, 3};
    b.v_d = VertexSet(4, {0});
    b.h_parent = {1, 2, -1, 2};
    return b;
}

}  // namespace

TEST_CASE("blueprint validation") {
    CHECK(validate_blueprint(worked_blueprint()).valid());

    ExtremalBlueprint no_vd = worked_blueprint();
    no_vd.v_d = VertexSet(4);
    CHECK_FALSE(validate_blueprint(no_vd).valid());

    ExtremalBlueprint cyclic = worked_blueprint();
    cyclic.h_parent = {1, 0, -1, 2};
    CHECK_FALSE(validate_blueprint(cyclic).valid());

    ExtremalBlueprint wrong_roots = worked_blueprint();
    wrong_roots.h_parent = {-1, 2, 1, 2};  // root 0 is not the f_plus image of v_d
    CHECK_FALSE(validate_blueprint(wrong_roots).valid());

    ExtremalBlueprint not_perm = worked_blueprint();
    not_perm.f_plus = {2, 2, 1, 3};
    CHECK_FALSE(validate_blueprint(not_perm).valid());
}

TEST_CASE("construction from the worked blueprint") {
    const Digraph d = construct_from_blueprint(worked_blueprint());
    CHECK(d == parse_edge_list("4\n1 0\n0 2\n2 1\n3 3\n0 1\n0 3\n0 0\n2 0\n"));
    CHECK(forcing_arcs(d) == std::vector<Arc>{{0, 2}, {1, 0}, {2, 1}, {3, 3}});
    CHECK(build_h_digraph(d).arcs == std::vector<Arc>{{1, 0}, {2, 1}, {2, 3}});
}

TEST_CASE("degenerate and cycle blueprints") {
    ExtremalBlueprint single;
    single.n = 1;
    single.f_plus = {0};
    single.v_d = VertexSet(1, {0});
    single.h_parent = {-1};
    CHECK(construct_from_blueprint(single) == Digraph(1, {{0, 0}}));

    ExtremalBlueprint cycle;
    cycle.n = 3;
    cycle.f_plus = {1, 2, 0};
    cycle.v_d = VertexSet::full(3);
    cycle.h_parent = {-1, -1, -1};
    const Digraph d = construct_from_blueprint(cycle);
    CHECK(d == Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(is_extremal(d));

    CHECK_THROWS_AS(construct_from_blueprint(ExtremalBlueprint{}), std::invalid_argument);
}

TEST_CASE("decomposition") {
    const Digraph fig = construct_from_blueprint(worked_blueprint());
    const ExtremalBlueprint b = decompose_to_blueprint(fig);
    CHECK(b.f_plus == worked_blueprint().f_plus);
    CHECK(b.v_d == worked_blueprint().v_d);
    CHECK(b.h_parent == worked_blueprint().h_parent);

    const ExtremalBlueprint trivial = decompose_to_blueprint(Digraph(1, {{0, 0}}));
    CHECK(trivial.v_d == VertexSet(1, {0}));

    CHECK_THROWS_AS(decompose_to_blueprint(Digraph(2, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("round-trip on every extremal digraph of order three") {
    const LabelledDigraphFamily family = labelled_digraphs(3);
    std::set<CanonicalForm> extremal_classes;
    for (std::uint64_t i = 0; i < family.size(); ++i) {
        const Digraph d = family.at(i);
        if (!is_locatable(d) || !is_extremal(d)) continue;
        extremal_classes.insert(canonical_form(d));
        CHECK(construct_from_blueprint(decompose_to_blueprint(d)) == d);
    }

    std::set<CanonicalForm> constructed_classes;
    enumerate_blueprints(3, [&](const ExtremalBlueprint& b) {
        constructed_classes.insert(canonical_form(construct_from_blueprint(b)));
    });
    CHECK(constructed_classes == extremal_classes);
}

TEST_CASE("blueprint enumeration counts") {
    std::uint64_t count1 = enumerate_blueprints(1, [](const ExtremalBlueprint&) {});
    CHECK(count1 == 1);

    // Cross-count with a naive generator over raw (permutation, subset,
    // parent function) triples that rechecks the invariants from scratch.
    std::uint64_t naive = 0;
    const int n = 2;
    const int perms[2][2] = {{0, 1}, {1, 0}};
    for (const auto& perm : perms)
        for (int vd = 1; vd < 4; ++vd)
            for (int p0 = -1; p0 < n; ++p0)
                for (int p1 = -1; p1 < n; ++p1) {
                    const int parent[2] = {p0, p1};
                    bool ok = true;
                    for (int v = 0; v < n && ok; ++v) {
                        if (parent[v] == v) ok = false;
                        bool is_root = parent[v] == -1;
                        bool should_be_root = false;
                        for (int x = 0; x < n; ++x)
                            if ((vd >> x) & 1 && perm[x] == v) should_be_root = true;
                        if (is_root != should_be_root) ok = false;
                    }
                    if (ok && p0 == 1 && p1 == 0) ok = false;  // the only possible 2-cycle
                    if (ok) ++naive;
                }
    std::uint64_t count2 = enumerate_blueprints(2, [](const ExtremalBlueprint&) {});
    CHECK(count2 == naive);
    CHECK(count2 == 6);
}

TEST_CASE("every enumerated blueprint is valid and constructs an extremal digraph") {
    for (int n = 1; n <= 3; ++n) {
        enumerate_blueprints(n, [&](const ExtremalBlueprint& b) {
            CHECK(validate_blueprint(b).valid());
            const Digraph d = construct_from_blueprint(b);
            CHECK(is_locatable(d));
            CHECK(is_extremal(d));
        });
    }
    CHECK_THROWS_AS(enumerate_blueprints(6, [](const ExtremalBlueprint&) {}, 5),
                    std::length_error);
}

TEST_CASE("half-graph realizations") {
    const Digraph h1 = build_half_graph_digraph(1);
    CHECK(h1 == Digraph(2, {{0, 1}, {1, 0}}));
    CHECK(min_old_set(h1).gamma == 2);

    const Digraph h2 = build_half_graph_digraph(2);
    CHECK(underlying_graph(h2).edges() == std::vector<Arc>{{0, 2}, {0, 3}, {1, 3}});
    CHECK(min_old_set(h2).gamma == 4);

    CHECK(min_old_set(build_half_graph_digraph(3)).gamma == 6);
    CHECK_THROWS_AS(build_half_graph_digraph(0), std::invalid_argument);
}

TEST_CASE("half-graphs are edge-minimal connected extremal realizations") {
    for (int k = 1; k <= 3; ++k) {
        const Digraph hk = build_half_graph_digraph(k);
        CHECK(is_extremal(hk));
        CHECK(underlying_graph(hk).connected());
        for (const auto& [u, v] : underlying_graph(hk).edges()) {
            Digraph reduced(hk.order());
            for (const auto& arc : hk.arcs())
                if (arc != Arc{u, v} && arc != Arc{v, u}) reduced.add_arc(arc.first, arc.second);
            // Dropping an edge never leaves another connected extremal
            // digraph (it may fall apart into smaller extremal components).
            CHECK((!is_locatable(reduced) || !is_extremal(reduced) ||
                   !underlying_graph(reduced).connected()));
        }
    }
}

TEST_CASE("rooted-tree transitive closures") {
    const Digraph path = build_tc_rooted_tree({-1, 0, 1}, true);
    CHECK(path == Digraph(3, {{0, 1}, {0, 2}, {1, 2}, {0, 0}, {1, 1}, {2, 2}}));
    CHECK(min_old_set(path).gamma == 3);
    CHECK(path == reflexive_closure(build_tc_rooted_tree({-1, 0, 1}, false)));

    CHECK(build_tc_rooted_tree({-1}, true) == Digraph(1, {{0, 0}}));

    const Digraph star = build_tc_rooted_tree({-1, 0, 0}, true);
    CHECK(star == Digraph(3, {{0, 1}, {0, 2}, {0, 0}, {1, 1}, {2, 2}}));
    CHECK(min_old_set(star).gamma == 3);

    CHECK_THROWS_AS(build_tc_rooted_tree({-1, -1, 0}, true), std::invalid_argument);
    CHECK_THROWS_AS(build_tc_rooted_tree({1, 0}, true), std::invalid_argument);
    CHECK_THROWS_AS(build_tc_rooted_tree({-1, 1}, true), std::invalid_argument);
}

TEST_CASE("blueprint text format") {
    const ExtremalBlueprint b =
        parse_blueprint("4\nfplus: 2 0 1 3\nvd: 0\nparent 1 0\nparent 2 1\nparent 2 3\n");
    CHECK(b.f_plus == worked_blueprint().f_plus);
    CHECK(b.v_d == worked_blueprint().v_d);
    CHECK(b.h_parent == worked_blueprint().h_parent);
    CHECK_THROWS_AS(parse_blueprint("2\nvd: 0\n"), ParseError);
    CHECK_THROWS_AS(parse_blueprint("2\nfplus: 0 1\nvd: 0\nparent 0 1\nparent 0 1\n"),
                    ParseError);
}
