#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oldset/canonical.hpp"
#include "oldset/digraph.hpp"

namespace oldset {

struct TreeCatalogEntry {
    Digraph digraph;
    CanonicalForm form;
    std::string provenance;  // base case or the producing rule
};

/// Extremal digraphs of a given order whose underlying graph is a tree,
/// one representative per isomorphism class, sorted by canonical form.
struct TreeCatalog {
    int order = 0;
    std::vector<TreeCatalogEntry> members;
    std::uint64_t labelled_count = 0;  // labelled digraphs across all classes

    bool contains(const CanonicalForm& form) const;
};

/// True iff the underlying graph is a tree and d is locatable and extremal.
bool in_tree_family(const Digraph& d);

/// One-vertex extensions (new leaf with a loop): rule i attaches the leaf
/// below a domination-forced b, rule ii attaches it above b when b has no
/// loop and f-(b) is domination-forced with out-degree 1.
std::vector<std::pair<Digraph, std::string>> c1_extensions(const Digraph& d);

/// Two-vertex extensions: a symmetric pair {a, b} glued to a vertex c by one
/// of the four rule-dependent arc-set choices.
std::vector<std::pair<Digraph, std::string>> c2_extensions(const Digraph& d);

/// Catalogs for orders 1..n built recursively from the two base catalogs via
/// c1/c2 extensions; every candidate is re-verified extremal before
/// insertion.  Throws std::length_error beyond the cap (default 8).
std::vector<TreeCatalog> enumerate_tree_catalogs(int n, int cap = 8);
TreeCatalog enumerate_T_n(int n, int cap = 8);

/// Independent oracle: exhaustive scan of all digraphs whose underlying
/// graph is a labelled tree, filtered by brute-force extremality.  Throws
/// std::length_error beyond the cap (default 6).
std::vector<TreeCatalog> oracle_tree_catalogs(int n, int cap = 6);
TreeCatalog oracle_T_n(int n, int cap = 6);

/// Structural facts about members of the tree family: (a) in-degrees at most
/// 2, (b) location-forced vertices have out-degree 1, (c) a leaf with a
/// forcing loop lies on no directed 2-cycle, (d) for n >= 3 there is a
/// forcing loop at a leaf or a pendant path of length 2 whose leaf lies on a
/// forcing 2-cycle.
struct TreeLemmaReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

TreeLemmaReport check_tree_lemmas(const Digraph& d);

}  // namespace oldset
