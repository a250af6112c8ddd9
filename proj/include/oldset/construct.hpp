#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oldset/digraph.hpp"

namespace oldset {

/// The data from which every extremal digraph is built: the forcing
/// permutation f+ (its cycles are the forcing cycles), the partition into
/// domination-forced (v_d) and location-forced (v_l) vertices, and the
/// rooted forest given as a parent map (-1 marks roots).
struct ExtremalBlueprint {
    int n = 0;
    std::vector<int> f_plus;
    VertexSet v_d;
    std::vector<int> h_parent;

    VertexSet v_l() const { return v_d.complement(); }
    std::vector<int> f_minus() const;
};

struct BlueprintValidation {
    std::vector<std::string> problems;
    bool valid() const { return problems.empty(); }
};

/// Checks all blueprint invariants: f+ is a permutation, v_d is nonempty,
/// the parent map is a forest whose roots are exactly f+(v_d).
BlueprintValidation validate_blueprint(const ExtremalBlueprint& b);

/// Arc set = forcing arcs {v -> f+(v)} plus, for every vertex v of the
/// forest, arcs from f-(v) to every proper descendant of v.  The result is
/// locatable and extremal.  Throws std::invalid_argument on invalid input.
Digraph construct_from_blueprint(const ExtremalBlueprint& b);

/// Inverse of the construction for locatable extremal digraphs; the
/// round-trip through construct_from_blueprint reproduces the arc set
/// exactly.  Throws std::invalid_argument when d is not extremal.
ExtremalBlueprint decompose_to_blueprint(const Digraph& d);

/// Symmetric loop-free realization of the half-graph H_k on 2k vertices
/// (v_i = i-1, w_j = k+j-1, edges v_i w_j for i <= j).
Digraph build_half_graph_digraph(int k);

/// Transitive closure of the rooted directed tree given by `parent`
/// (exactly one -1 entry marks the root), plus all loops when add_loops.
Digraph build_tc_rooted_tree(const std::vector<int>& parent, bool add_loops);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 (a loop when n = 1).
Digraph build_directed_cycle(int n);

/// Calls fn for every valid blueprint on the labelled vertex set 0..n-1,
/// each exactly once, in a fixed deterministic order; returns the count.
/// Throws std::length_error beyond the cap (default 5).
std::uint64_t enumerate_blueprints(int n, const std::function<void(const ExtremalBlueprint&)>& fn,
                                   int cap = 5);

/// Blueprint text format: "n" line, "fplus: ..." line, "vd: ..." line, then
/// one "parent u v" line per forest arc (u is the parent of v).
ExtremalBlueprint parse_blueprint(std::string_view text);

}  // namespace oldset
