#include "oldset/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace oldset {

Digraph LabelledDigraphFamily::at(std::uint64_t index) const {
    const int n = order;
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if ((index >> (u * n + v)) & 1u) d.add_arc(u, v);
    return d;
}

LabelledDigraphFamily labelled_digraphs(int n, int cap) {
    if (cap > 7) cap = 7;  // 2^(n^2) indices must fit a u64 comfortably
    if (n < 1 || n > cap) throw std::length_error("labelled_digraphs: order cap exceeded");
    return LabelledDigraphFamily{n};
}

namespace {

std::uint64_t int_pow(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    while (exp-- > 0) out *= base;
    return out;
}

}  // namespace

std::vector<Arc> labelled_tree_edges(int n, std::uint64_t tree_index) {
    std::vector<Arc> edges;
    if (n == 1) return edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
        return edges;
    }
    // Decode the base-n Pruefer sequence of length n-2.
    std::vector<int> code(n - 2);
    for (int i = 0; i < n - 2; ++i) {
        code[i] = static_cast<int>(tree_index % n);
        tree_index /= n;
    }
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];
    for (int c : code) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1) {
                edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
                --degree[leaf];
                --degree[c];
                break;
            }
        }
    }
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) {
            if (u < 0)
                u = v;
            else
                edges.emplace_back(u, v);
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::uint64_t TreeDigraphFamily::tree_count() const {
    return order == 1 ? 1 : int_pow(order, order - 2);
}

std::uint64_t TreeDigraphFamily::per_tree_count() const {
    if (order == 1) return 2;  // loop or no loop
    return int_pow(3, order - 1) * int_pow(2, order);
}

std::uint64_t TreeDigraphFamily::size() const { return tree_count() * per_tree_count(); }

Digraph TreeDigraphFamily::at(std::uint64_t index) const {
    const int n = order;
    Digraph d(n);
    const std::uint64_t loops = index % int_pow(2, n);
    index /= int_pow(2, n);
    for (int v = 0; v < n; ++v)
        if ((loops >> v) & 1u) d.add_arc(v, v);
    if (n == 1) return d;

    std::uint64_t states = index % int_pow(3, n - 1);
    index /= int_pow(3, n - 1);
    const std::vector<Arc> edges = labelled_tree_edges(n, index);
    for (const auto& [u, v] : edges) {
        switch (states % 3) {
            case 0: d.add_arc(u, v); break;
            case 1: d.add_arc(v, u); break;
            default:
                d.add_arc(u, v);
                d.add_arc(v, u);
        }
        states /= 3;
    }
    return d;
}

TreeDigraphFamily tree_digraphs(int n, int cap) {
    if (cap > 8) cap = 8;
    if (n < 1 || n > cap) throw std::length_error("tree_digraphs: order cap exceeded");
    return TreeDigraphFamily{n};
}

}  // namespace oldset
