#include "oldset/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace oldset {

Digraph::Digraph(int n) : n_(n) {
    if (n < 1 || n > VertexSet::max_universe)
        throw std::length_error("digraph order must be within 1..64");
    out_.assign(n_, VertexSet(n_));
    in_.assign(n_, VertexSet(n_));
}

Digraph::Digraph(int n, std::initializer_list<Arc> arcs) : Digraph(n) {
    for (const auto& [u, v] : arcs) add_arc(u, v);
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
    for (const auto& [u, v] : arcs) add_arc(u, v);
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

void Digraph::add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (out_[u].contains(v)) return;
    out_[u].add(v);
    in_[v].add(u);
    ++arc_count_;
}

bool Digraph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return out_[u].contains(v);
}

const VertexSet& Digraph::out_neighbours(int v) const {
    check_vertex(v);
    return out_[v];
}

const VertexSet& Digraph::in_neighbours(int v) const {
    check_vertex(v);
    return in_[v];
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) out.emplace_back(u, v);
    return out;
}

std::size_t UndirectedGraph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n; ++v) twice += adj[v].size();
    return twice / 2;
}

std::vector<Arc> UndirectedGraph::edges() const {
    std::vector<Arc> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool UndirectedGraph::connected() const {
    if (n == 0) return true;
    VertexSet seen = VertexSet::single(n, 0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(n);
        for (int v : frontier) next |= adj[v];
        frontier = next - seen;
        seen |= frontier;
    }
    return seen.size() == n;
}

UndirectedGraph underlying_graph(const Digraph& d) {
    const int n = d.order();
    UndirectedGraph g{n, std::vector<VertexSet>(n, VertexSet(n))};
    for (int u = 0; u < n; ++u) {
        for (int v : d.out_neighbours(u)) {
            if (u == v) continue;
            g.adj[u].add(v);
            g.adj[v].add(u);
        }
    }
    return g;
}

StructureFlags classify(const Digraph& d) {
    const int n = d.order();
    StructureFlags f;
    f.symmetric = true;
    f.loop_free = true;
    f.reflexive = true;
    bool two_cycle_free = true;
    f.source_exists = false;
    f.sink_exists = false;
    for (int u = 0; u < n; ++u) {
        if (d.has_loop(u))
            f.loop_free = false;
        else
            f.reflexive = false;
        if (d.in_degree(u) == 0) f.source_exists = true;
        if (d.out_degree(u) == 0) f.sink_exists = true;
        for (int v : d.out_neighbours(u)) {
            if (u == v) continue;
            if (!d.has_arc(v, u))
                f.symmetric = false;
            else if (u < v)
                two_cycle_free = false;
        }
    }
    f.oriented = f.loop_free && two_cycle_free;
    f.connected_underlying = underlying_graph(d).connected();
    return f;
}

Digraph reflexive_closure(const Digraph& d) {
    Digraph out = d;
    for (int v = 0; v < d.order(); ++v) out.add_arc(v, v);
    return out;
}

std::vector<VertexSet> underlying_components(const Digraph& d) {
    const UndirectedGraph g = underlying_graph(d);
    const int n = d.order();
    std::vector<VertexSet> comps;
    VertexSet assigned(n);
    for (int start = 0; start < n; ++start) {
        if (assigned.contains(start)) continue;
        VertexSet comp = VertexSet::single(n, start);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(n);
            for (int v : frontier) next |= g.adj[v];
            frontier = next - comp;
            comp |= frontier;
        }
        assigned |= comp;
        comps.push_back(comp);
    }
    return comps;
}

Digraph induced_subgraph(const Digraph& d, const VertexSet& keep) {
    std::vector<int> index(d.order(), -1);
    int m = 0;
    for (int v : keep) index[v] = m++;
    Digraph sub(m);
    for (int u : keep)
        for (int v : d.out_neighbours(u))
            if (keep.contains(v)) sub.add_arc(index[u], index[v]);
    return sub;
}

Digraph permute_digraph(const Digraph& d, const std::vector<int>& perm) {
    Digraph out(d.order());
    for (int u = 0; u < d.order(); ++u)
        for (int v : d.out_neighbours(u)) out.add_arc(perm[u], perm[v]);
    return out;
}

}  // namespace oldset
