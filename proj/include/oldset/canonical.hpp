#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "oldset/digraph.hpp"

namespace oldset {

inline constexpr int default_canonical_cap = 10;

/// Total-order key over isomorphism classes: the minimum, over all vertex
/// relabellings, of a fixed bit-encoding of the adjacency matrix.  Two
/// digraphs have equal keys iff they are isomorphic (loops respected).
struct CanonicalForm {
    std::uint8_t order = 0;
    std::array<std::uint64_t, 2> key{0, 0};

    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;

    std::string to_string() const;
};

/// Exact canonicalization (all n! relabellings with prefix pruning).
/// Throws std::length_error when d.order() exceeds max_order.
CanonicalForm canonical_form(const Digraph& d, int max_order = default_canonical_cap);

bool isomorphic(const Digraph& a, const Digraph& b, int max_order = default_canonical_cap);

/// Number of distinct labelled digraphs isomorphic to d (n!/|Aut|),
/// counted directly over all relabellings.  Requires d.order() <= 8.
std::uint64_t labelled_copy_count(const Digraph& d);

}  // namespace oldset
