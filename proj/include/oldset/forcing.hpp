#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oldset/digraph.hpp"

namespace oldset {

/// Per-vertex forcing classification with explicit witnesses.
struct ForcedVertex {
    /// Vertex w with N-(w) = {v} (smallest such w).
    std::optional<int> domination_witness;
    /// Unordered pairs {x, y}, x < y, with N-(x) symdiff N-(y) = {v}.
    std::vector<std::pair<int, int>> location_witnesses;

    bool domination_forced() const { return domination_witness.has_value(); }
    bool location_forced() const { return !location_witnesses.empty(); }
    bool forced() const { return domination_forced() || location_forced(); }
    /// Both kinds at once, or location-forced by two distinct pairs.
    bool double_forced() const {
        return (domination_forced() && location_forced()) || location_witnesses.size() >= 2;
    }
};

struct ForcedReport {
    std::vector<ForcedVertex> vertices;

    VertexSet domination_forced_set() const;
    VertexSet location_forced_set() const;
    VertexSet forced_set() const;
    bool any_double_forced() const;
};

ForcedReport forced_report(const Digraph& d);

/// Arcs xy with N-(y) = {x}, or N-(z) = N-(y) minus {x} for some z (so the
/// pair (y, z) is separated only by x).  The tails of these arcs are exactly
/// the forced vertices.
std::vector<Arc> forcing_arcs(const Digraph& d);

/// The forcing-arc subgraph and, when it is a spanning disjoint union of
/// directed cycles, its cycle partition and the f-/f+ maps.
struct ForcingDecomposition {
    std::vector<Arc> arcs;
    bool spans_cycles = false;
    /// Populated only when spans_cycles: cycles ordered by smallest member,
    /// each starting at its smallest member and following f_plus.
    std::vector<std::vector<int>> cycles;
    std::vector<int> f_plus;   // unique forcing out-neighbour
    std::vector<int> f_minus;  // unique forcing in-neighbour
};

ForcingDecomposition forcing_decomposition(const Digraph& d);

/// The cycle-decomposition criterion alone; callers pair it with a
/// locatability check when applying the characterization.
bool is_extremal_structural(const Digraph& d);

/// Deletes every non-forcing arc whose tail is x.
Digraph strip_non_forcing_arcs(const Digraph& d, int x);

/// The auxiliary digraph with an arc x -> y whenever some location-forced v
/// satisfies N-(x) = N-(y) minus {v}; a disjoint union of rooted directed
/// trees when d is extremal.
struct HForest {
    std::vector<Arc> arcs;
    std::vector<int> parent;  // -1 for parentless vertices
    VertexSet roots;
    bool is_forest = false;  // false iff some vertex has two in-arcs
};

HForest build_h_digraph(const Digraph& d);

}  // namespace oldset
