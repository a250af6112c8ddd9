#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oldset/digraph.hpp"

namespace oldset {

/// Result of the exact OLD-number computation.  A non-locatable digraph is a
/// value, not an error: gamma and witness are absent and locatable is false.
struct OldResult {
    std::optional<int> gamma;
    std::optional<VertexSet> witness;
    bool locatable = false;
};

/// Unordered pairs {u, v}, u < v, with identical open in-neighbourhoods.
std::vector<std::pair<int, int>> in_twins(const Digraph& d);

/// True iff no vertex has in-degree 0 and there are no in-twins; equivalently
/// the whole vertex set is an OLD set.
bool is_locatable(const Digraph& d);

/// True iff every vertex has an in-neighbour in s and every pair of distinct
/// vertices is separated by some member of s via open in-neighbourhoods.
bool is_old_set(const Digraph& d, const VertexSet& s);

/// Exact minimum by size-increasing exhaustive subset search, run per
/// connected component of the underlying graph and summed.  The witness is
/// the lexicographically smallest minimum OLD set (per component).
OldResult min_old_set(const Digraph& d);

/// gamma_OL(d) == order, tested via the n single-vertex deletions.
bool is_extremal(const Digraph& d);

/// Size of a valid OLD set found greedily (highest resolved-requirement
/// count first, lowest vertex index on ties); an upper bound for gamma_OL.
std::optional<int> greedy_old_upper_bound(const Digraph& d);

/// The greedy OLD set itself (union over components).
std::optional<VertexSet> greedy_old_set(const Digraph& d);

}  // namespace oldset
