#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "oldset/vertex_set.hpp"

namespace oldset {

/// Arc u -> v.  A loop is (v, v).
using Arc = std::pair<int, int>;

/// Directed graph with loops allowed and set semantics on arcs (no parallel
/// arcs).  Vertices are dense integers 0..n-1.  In-neighbourhoods are kept in
/// sync with out-neighbourhoods on every insertion, so N-(v) queries are O(1).
class Digraph {
public:
    explicit Digraph(int n);
    Digraph(int n, std::initializer_list<Arc> arcs);
    Digraph(int n, const std::vector<Arc>& arcs);

    int order() const { return n_; }

    /// Idempotent (set semantics).  Throws std::out_of_range on bad vertices.
    void add_arc(int u, int v);

    bool has_arc(int u, int v) const;
    bool has_loop(int v) const { return has_arc(v, v); }

    const VertexSet& out_neighbours(int v) const;
    const VertexSet& in_neighbours(int v) const;

    int out_degree(int v) const { return out_neighbours(v).size(); }
    int in_degree(int v) const { return in_neighbours(v).size(); }

    std::size_t arc_count() const { return arc_count_; }

    /// All arcs sorted by (tail, head).
    std::vector<Arc> arcs() const;

    bool operator==(const Digraph&) const = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::size_t arc_count_ = 0;
};

/// Loop-free simple graph on the same vertex set.
struct UndirectedGraph {
    int n = 0;
    std::vector<VertexSet> adj;

    bool has_edge(int u, int v) const { return u != v && adj[u].contains(v); }
    int degree(int v) const { return adj[v].size(); }
    std::size_t edge_count() const;
    std::vector<Arc> edges() const;  // each with u < v
    bool connected() const;
    bool is_tree() const { return connected() && edge_count() + 1 == static_cast<std::size_t>(n); }
};

struct StructureFlags {
    bool symmetric = false;
    bool reflexive = false;
    bool loop_free = false;
    bool oriented = false;
    bool connected_underlying = false;
    bool source_exists = false;
    bool sink_exists = false;
};

/// Edge {x,y} present iff x != y and at least one of the arcs xy, yx exists.
UndirectedGraph underlying_graph(const Digraph& d);

/// Structural predicates; connectivity refers to the underlying graph, a
/// source/sink is a vertex of in-/out-degree 0 with loops counting once
/// toward both degrees.
StructureFlags classify(const Digraph& d);

/// D plus a loop at every vertex; idempotent.
Digraph reflexive_closure(const Digraph& d);

/// Vertex sets of the connected components of the underlying graph, ordered
/// by smallest member.
std::vector<VertexSet> underlying_components(const Digraph& d);

/// Subgraph induced by `keep`, with vertices reindexed in increasing order.
Digraph induced_subgraph(const Digraph& d, const VertexSet& keep);

/// Image of d under the vertex relabelling v -> perm[v].
Digraph permute_digraph(const Digraph& d, const std::vector<int>& perm);

}  // namespace oldset
