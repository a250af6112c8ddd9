#pragma once

#include <cstdint>

#include "oldset/digraph.hpp"

namespace oldset {

/// All labelled digraphs with loops on n vertices, indexed by the
/// arc-presence bitstring (bit u*n+v = arc u->v).  Pure index -> Digraph
/// mapping so scans can be sharded by index range.
struct LabelledDigraphFamily {
    int order = 0;

    std::uint64_t size() const { return std::uint64_t{1} << (order * order); }
    Digraph at(std::uint64_t index) const;
};

/// Throws std::length_error beyond the cap (default 4; hard ceiling 7).
LabelledDigraphFamily labelled_digraphs(int n, int cap = 4);

/// All digraphs whose underlying graph is a tree on n labelled vertices:
/// every labelled tree (Pruefer order) x one of 3 states per edge
/// (u->v, v->u, both) x one loop bit per vertex.
struct TreeDigraphFamily {
    int order = 0;

    std::uint64_t tree_count() const;       // n^(n-2)
    std::uint64_t per_tree_count() const;   // 3^(n-1) * 2^n
    std::uint64_t size() const;
    Digraph at(std::uint64_t index) const;
};

/// Throws std::length_error beyond the cap (default 6; hard ceiling 8).
TreeDigraphFamily tree_digraphs(int n, int cap = 6);

/// Edges (u < v, sorted) of the labelled tree with the given Pruefer index.
std::vector<Arc> labelled_tree_edges(int n, std::uint64_t tree_index);

}  // namespace oldset
