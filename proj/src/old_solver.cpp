#include "oldset/old_solver.hpp"

#include <algorithm>
#include <cassert>

namespace oldset {

namespace {

// Domination and separation requirements restricted to one component.
// Vertices of other components can neither dominate nor distinguish here,
// so the global search decomposes into independent per-component searches.
bool old_set_on(const Digraph& d, const VertexSet& s, const std::vector<int>& comp) {
    for (int v : comp)
        if (!d.in_neighbours(v).intersects(s)) return false;
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = i + 1; j < comp.size(); ++j)
            if (!(d.in_neighbours(comp[i]) ^ d.in_neighbours(comp[j])).intersects(s)) return false;
    return true;
}

std::optional<VertexSet> greedy_on(const Digraph& d, const std::vector<int>& comp) {
    const int n = d.order();
    std::vector<int> dom_pending;
    std::vector<std::pair<int, int>> sep_pending;
    for (int v : comp) {
        if (d.in_neighbours(v).empty()) return std::nullopt;
        dom_pending.push_back(v);
    }
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = i + 1; j < comp.size(); ++j) {
            if ((d.in_neighbours(comp[i]) ^ d.in_neighbours(comp[j])).empty()) return std::nullopt;
            sep_pending.emplace_back(comp[i], comp[j]);
        }

    VertexSet s(n);
    while (!dom_pending.empty() || !sep_pending.empty()) {
        int best = -1, best_score = 0;
        for (int x : comp) {
            if (s.contains(x)) continue;
            int score = 0;
            for (int v : dom_pending)
                if (d.in_neighbours(v).contains(x)) ++score;
            for (const auto& [u, v] : sep_pending)
                if ((d.in_neighbours(u) ^ d.in_neighbours(v)).contains(x)) ++score;
            if (score > best_score) {
                best_score = score;
                best = x;
            }
        }
        assert(best >= 0);
        s.add(best);
        std::erase_if(dom_pending, [&](int v) { return d.in_neighbours(v).intersects(s); });
        std::erase_if(sep_pending, [&](const std::pair<int, int>& p) {
            return (d.in_neighbours(p.first) ^ d.in_neighbours(p.second)).intersects(s);
        });
    }
    return s;
}

// First k-subset of comp (in lexicographic order over the sorted vertex
// list) that is an OLD set on the component, if any.
std::optional<VertexSet> first_old_subset(const Digraph& d, const std::vector<int>& comp, int k) {
    const int m = static_cast<int>(comp.size());
    if (k > m) return std::nullopt;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s(d.order());
        for (int i : idx) s.add(comp[i]);
        if (old_set_on(d, s, comp)) return s;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<int> to_list(const VertexSet& s) {
    std::vector<int> out;
    for (int v : s) out.push_back(v);
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> in_twins(const Digraph& d) {
    std::vector<std::pair<int, int>> twins;
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (d.in_neighbours(u) == d.in_neighbours(v)) twins.emplace_back(u, v);
    return twins;
}

bool is_locatable(const Digraph& d) {
    for (int v = 0; v < d.order(); ++v)
        if (d.in_neighbours(v).empty()) return false;
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (d.in_neighbours(u) == d.in_neighbours(v)) return false;
    return true;
}

bool is_old_set(const Digraph& d, const VertexSet& s) {
    assert(s.universe() == d.order());
    for (int v = 0; v < d.order(); ++v)
        if (!d.in_neighbours(v).intersects(s)) return false;
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (!(d.in_neighbours(u) ^ d.in_neighbours(v)).intersects(s)) return false;
    return true;
}

OldResult min_old_set(const Digraph& d) {
    OldResult r;
    r.locatable = is_locatable(d);
    if (!r.locatable) return r;

    VertexSet witness(d.order());
    int gamma = 0;
    for (const VertexSet& comp_set : underlying_components(d)) {
        const std::vector<int> comp = to_list(comp_set);
        const auto greedy = greedy_on(d, comp);
        assert(greedy.has_value());  // locatability holds per component
        const int bound = greedy->size();
        for (int k = 1; k <= bound; ++k) {
            if (auto s = first_old_subset(d, comp, k)) {
                witness |= *s;
                gamma += k;
                break;
            }
        }
    }
    r.gamma = gamma;
    r.witness = witness;
    return r;
}

bool is_extremal(const Digraph& d) {
    if (!is_locatable(d)) return false;
    const VertexSet all = VertexSet::full(d.order());
    for (int v = 0; v < d.order(); ++v) {
        VertexSet s = all;
        s.remove(v);
        if (is_old_set(d, s)) return false;
    }
    return true;
}

std::optional<VertexSet> greedy_old_set(const Digraph& d) {
    if (!is_locatable(d)) return std::nullopt;
    VertexSet s(d.order());
    for (const VertexSet& comp_set : underlying_components(d)) {
        const auto part = greedy_on(d, to_list(comp_set));
        assert(part.has_value());
        s |= *part;
    }
    return s;
}

std::optional<int> greedy_old_upper_bound(const Digraph& d) {
    const auto s = greedy_old_set(d);
    if (!s) return std::nullopt;
    return s->size();
}

}  // namespace oldset
