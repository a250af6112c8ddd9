#include "oldset/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "oldset/edge_list.hpp"
#include "oldset/forcing.hpp"
#include "oldset/old_solver.hpp"

namespace oldset {

std::vector<int> ExtremalBlueprint::f_minus() const {
    std::vector<int> inv(n, -1);
    for (int v = 0; v < n; ++v) inv[f_plus[v]] = v;
    return inv;
}

BlueprintValidation validate_blueprint(const ExtremalBlueprint& b) {
    BlueprintValidation r;
    if (b.n < 1 || b.n > VertexSet::max_universe) {
        r.problems.push_back("order must be within 1..64");
        return r;
    }
    if (static_cast<int>(b.f_plus.size()) != b.n || static_cast<int>(b.h_parent.size()) != b.n) {
        r.problems.push_back("f_plus and h_parent must have one entry per vertex");
        return r;
    }
    std::vector<bool> hit(b.n, false);
    for (int v = 0; v < b.n; ++v) {
        if (b.f_plus[v] < 0 || b.f_plus[v] >= b.n) {
            r.problems.push_back("f_plus value out of range at vertex " + std::to_string(v));
            return r;
        }
        hit[b.f_plus[v]] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool x) { return x; }))
        r.problems.push_back("f_plus is not a permutation");
    if (b.v_d.universe() != b.n)
        r.problems.push_back("v_d universe does not match the order");
    else if (b.v_d.empty())
        r.problems.push_back("v_d must be nonempty (at least one domination-forced vertex)");
    for (int v = 0; v < b.n; ++v) {
        if (b.h_parent[v] < -1 || b.h_parent[v] >= b.n)
            r.problems.push_back("parent out of range at vertex " + std::to_string(v));
        if (b.h_parent[v] == v) r.problems.push_back("vertex " + std::to_string(v) + " is its own parent");
    }
    if (!r.problems.empty()) return r;

    for (int v = 0; v < b.n; ++v) {
        int steps = 0;
        for (int a = b.h_parent[v]; a != -1; a = b.h_parent[a]) {
            if (++steps > b.n) {
                r.problems.push_back("parent map contains a cycle through vertex " +
                                     std::to_string(v));
                break;
            }
        }
    }
    if (!r.problems.empty()) return r;

    VertexSet roots(b.n), expected(b.n);
    for (int v = 0; v < b.n; ++v)
        if (b.h_parent[v] == -1) roots.add(v);
    for (int x : b.v_d) expected.add(b.f_plus[x]);
    if (roots != expected)
        r.problems.push_back("forest roots " + roots.to_string() +
                             " differ from the f_plus image of v_d " + expected.to_string());
    return r;
}

Digraph construct_from_blueprint(const ExtremalBlueprint& b) {
    const auto validation = validate_blueprint(b);
    if (!validation.valid()) {
        std::string msg = "invalid blueprint:";
        for (const auto& p : validation.problems) msg += " " + p + ";";
        throw std::invalid_argument(msg);
    }
    Digraph d(b.n);
    const std::vector<int> f_minus = b.f_minus();
    for (int v = 0; v < b.n; ++v) d.add_arc(v, b.f_plus[v]);
    // u is a proper descendant of each of its forest ancestors a.
    for (int u = 0; u < b.n; ++u)
        for (int a = b.h_parent[u]; a != -1; a = b.h_parent[a]) d.add_arc(f_minus[a], u);
    return d;
}

ExtremalBlueprint decompose_to_blueprint(const Digraph& d) {
    if (!is_locatable(d)) throw std::invalid_argument("decompose_to_blueprint: not locatable");
    const ForcingDecomposition fd = forcing_decomposition(d);
    if (!fd.spans_cycles)
        throw std::invalid_argument("decompose_to_blueprint: forcing arcs do not span cycles");
    const HForest h = build_h_digraph(d);
    if (!h.is_forest)
        throw std::invalid_argument("decompose_to_blueprint: auxiliary digraph is not a forest");
    ExtremalBlueprint b;
    b.n = d.order();
    b.f_plus = fd.f_plus;
    b.v_d = forced_report(d).domination_forced_set();
    b.h_parent = h.parent;
    return b;
}

Digraph build_half_graph_digraph(int k) {
    if (k < 1) throw std::invalid_argument("half-graph index must be positive");
    if (2 * k > VertexSet::max_universe) throw std::length_error("half-graph too large");
    Digraph d(2 * k);
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j) {
            d.add_arc(i - 1, k + j - 1);
            d.add_arc(k + j - 1, i - 1);
        }
    return d;
}

Digraph build_tc_rooted_tree(const std::vector<int>& parent, bool add_loops) {
    const int n = static_cast<int>(parent.size());
    if (n < 1 || n > VertexSet::max_universe)
        throw std::invalid_argument("rooted tree order must be within 1..64");
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (parent[v] == -1) {
            if (root != -1) throw std::invalid_argument("rooted tree must have a single root");
            root = v;
        } else if (parent[v] < 0 || parent[v] >= n || parent[v] == v) {
            throw std::invalid_argument("bad parent for vertex " + std::to_string(v));
        }
    }
    if (root == -1) throw std::invalid_argument("rooted tree must have a root (parent -1)");
    for (int v = 0; v < n; ++v) {
        int steps = 0;
        for (int a = parent[v]; a != -1; a = parent[a])
            if (++steps > n) throw std::invalid_argument("parent map contains a cycle");
    }
    Digraph d(n);
    for (int v = 0; v < n; ++v)
        for (int a = parent[v]; a != -1; a = parent[a]) d.add_arc(a, v);
    if (add_loops)
        for (int v = 0; v < n; ++v) d.add_arc(v, v);
    return d;
}

Digraph build_directed_cycle(int n) {
    Digraph d(n);
    for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
    return d;
}

std::uint64_t enumerate_blueprints(int n, const std::function<void(const ExtremalBlueprint&)>& fn,
                                   int cap) {
    if (cap > 6) cap = 6;
    if (n < 1 || n > cap) throw std::length_error("enumerate_blueprints: order cap exceeded");
    std::uint64_t count = 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (std::uint64_t vd_mask = 1; vd_mask < (std::uint64_t{1} << n); ++vd_mask) {
            const VertexSet v_d = VertexSet::from_bits(n, vd_mask);
            VertexSet roots(n);
            for (int x : v_d) roots.add(perm[x]);
            std::vector<int> non_roots;
            for (int v = 0; v < n; ++v)
                if (!roots.contains(v)) non_roots.push_back(v);

            // Odometer over parent choices for the non-roots.
            std::vector<int> choice(non_roots.size(), 0);
            while (true) {
                std::vector<int> parent(n, -1);
                for (std::size_t i = 0; i < non_roots.size(); ++i)
                    parent[non_roots[i]] = choice[i];
                bool forest = true;
                for (int v = 0; v < n && forest; ++v) {
                    if (parent[v] == v) forest = false;
                    int steps = 0;
                    for (int a = parent[v]; a != -1 && forest; a = parent[a])
                        if (++steps > n) forest = false;
                }
                if (forest) {
                    ExtremalBlueprint b{n, perm, v_d, parent};
                    ++count;
                    fn(b);
                }
                std::size_t i = 0;
                while (i < choice.size() && ++choice[i] == n) choice[i++] = 0;
                if (i == choice.size()) break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

ExtremalBlueprint parse_blueprint(std::string_view text) {
    std::istringstream input{std::string(text)};
    std::string raw;
    int lineno = 0;
    ExtremalBlueprint b;
    bool have_n = false, have_fplus = false, have_vd = false;
    while (std::getline(input, raw)) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream fields(raw);
        std::string head;
        if (!(fields >> head)) continue;
        if (!have_n) {
            try {
                b.n = std::stoi(head);
            } catch (const std::exception&) {
                throw ParseError(lineno, "expected the order");
            }
            if (b.n < 1 || b.n > VertexSet::max_universe)
                throw ParseError(lineno, "order must be within 1..64");
            b.f_plus.assign(b.n, -1);
            b.v_d = VertexSet(b.n);
            b.h_parent.assign(b.n, -1);
            have_n = true;
        } else if (head == "fplus:") {
            for (int v = 0; v < b.n; ++v)
                if (!(fields >> b.f_plus[v]))
                    throw ParseError(lineno, "fplus needs " + std::to_string(b.n) + " values");
            have_fplus = true;
        } else if (head == "vd:") {
            int v;
            while (fields >> v) {
                if (v < 0 || v >= b.n) throw ParseError(lineno, "vd vertex out of range");
                b.v_d.add(v);
            }
            have_vd = true;
        } else if (head == "parent") {
            int u, v;
            if (!(fields >> u >> v)) throw ParseError(lineno, "expected \"parent u v\"");
            if (u < 0 || u >= b.n || v < 0 || v >= b.n)
                throw ParseError(lineno, "parent vertex out of range");
            if (b.h_parent[v] != -1) throw ParseError(lineno, "vertex has two parents");
            b.h_parent[v] = u;
        } else {
            throw ParseError(lineno, "unrecognized line \"" + head + "\"");
        }
    }
    if (!have_n || !have_fplus || !have_vd)
        throw ParseError(lineno, "blueprint needs the order, an fplus: line and a vd: line");
    return b;
}

}  // namespace oldset
