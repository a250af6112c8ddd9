#include "oldset/forcing.hpp"

#include <algorithm>

namespace oldset {

VertexSet ForcedReport::domination_forced_set() const {
    VertexSet s(static_cast<int>(vertices.size()));
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
        if (vertices[v].domination_forced()) s.add(v);
    return s;
}

VertexSet ForcedReport::location_forced_set() const {
    VertexSet s(static_cast<int>(vertices.size()));
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
        if (vertices[v].location_forced()) s.add(v);
    return s;
}

VertexSet ForcedReport::forced_set() const {
    return domination_forced_set() | location_forced_set();
}

bool ForcedReport::any_double_forced() const {
    return std::any_of(vertices.begin(), vertices.end(),
                       [](const ForcedVertex& v) { return v.double_forced(); });
}

ForcedReport forced_report(const Digraph& d) {
    const int n = d.order();
    ForcedReport rep;
    rep.vertices.resize(n);
    for (int w = 0; w < n; ++w) {
        const VertexSet& in = d.in_neighbours(w);
        if (in.size() == 1) {
            auto& witness = rep.vertices[in.first()].domination_witness;
            if (!witness) witness = w;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const VertexSet diff = d.in_neighbours(x) ^ d.in_neighbours(y);
            if (diff.size() == 1) rep.vertices[diff.first()].location_witnesses.emplace_back(x, y);
        }
    return rep;
}

std::vector<Arc> forcing_arcs(const Digraph& d) {
    const int n = d.order();
    std::vector<Arc> arcs;
    for (int x = 0; x < n; ++x) {
        for (int y : d.out_neighbours(x)) {
            const VertexSet& in_y = d.in_neighbours(y);
            bool forcing = in_y == VertexSet::single(n, x);
            if (!forcing) {
                VertexSet rest = in_y;
                rest.remove(x);
                for (int z = 0; z < n && !forcing; ++z)
                    forcing = d.in_neighbours(z) == rest;
            }
            if (forcing) arcs.emplace_back(x, y);
        }
    }
    return arcs;
}

ForcingDecomposition forcing_decomposition(const Digraph& d) {
    const int n = d.order();
    ForcingDecomposition fd;
    fd.arcs = forcing_arcs(d);

    std::vector<int> out_count(n, 0), in_count(n, 0);
    std::vector<int> succ(n, -1), pred(n, -1);
    for (const auto& [x, y] : fd.arcs) {
        ++out_count[x];
        ++in_count[y];
        succ[x] = y;
        pred[y] = x;
    }
    fd.spans_cycles = std::all_of(succ.begin(), succ.end(), [](int s) { return s >= 0; }) &&
                      fd.arcs.size() == static_cast<std::size_t>(n) &&
                      *std::max_element(out_count.begin(), out_count.end()) == 1 &&
                      *std::max_element(in_count.begin(), in_count.end()) == 1;
    if (!fd.spans_cycles) return fd;

    fd.f_plus = succ;
    fd.f_minus = pred;
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (int v = start; !seen[v]; v = succ[v]) {
            seen[v] = true;
            cycle.push_back(v);
        }
        fd.cycles.push_back(std::move(cycle));
    }
    return fd;
}

bool is_extremal_structural(const Digraph& d) { return forcing_decomposition(d).spans_cycles; }

Digraph strip_non_forcing_arcs(const Digraph& d, int x) {
    const std::vector<Arc> forcing = forcing_arcs(d);
    Digraph out(d.order());
    for (const auto& arc : d.arcs()) {
        if (arc.first == x && std::find(forcing.begin(), forcing.end(), arc) == forcing.end())
            continue;
        out.add_arc(arc.first, arc.second);
    }
    return out;
}

HForest build_h_digraph(const Digraph& d) {
    const int n = d.order();
    const VertexSet location_forced = forced_report(d).location_forced_set();

    HForest h;
    h.parent.assign(n, -1);
    h.roots = VertexSet(n);
    std::vector<int> in_count(n, 0);
    for (int y = 0; y < n; ++y) {
        for (int v : d.in_neighbours(y) & location_forced) {
            VertexSet target = d.in_neighbours(y);
            target.remove(v);
            for (int x = 0; x < n; ++x) {
                if (x == y || d.in_neighbours(x) != target) continue;
                h.arcs.emplace_back(x, y);
                ++in_count[y];
                if (h.parent[y] < 0) h.parent[y] = x;
            }
        }
    }
    std::sort(h.arcs.begin(), h.arcs.end());
    h.is_forest = true;
    for (int y = 0; y < n; ++y) {
        if (in_count[y] == 0) h.roots.add(y);
        if (in_count[y] > 1) h.is_forest = false;
    }
    return h;
}

}  // namespace oldset
