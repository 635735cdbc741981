#pragma once

#include "ultranear/cone.hpp"

#include <optional>

namespace ultranear {

struct Hyperarc {
    std::vector<int> tail; // sorted node ids
    std::vector<int> head;
    int row = -1; // constraint row that produced the arc, -1 for synthetic arcs
};

/// Directed hypergraph on the cone coordinates (node 0 is the auxiliary
/// variable, the rest are pairs).
struct DirectedHypergraph {
    int node_count = 0;
    std::vector<Hyperarc> arcs;

    bool has_multi_node_tail() const {
        for (const auto& arc : arcs)
            if (arc.tail.size() > 1) return true;
        return false;
    }
};

/// One hyperarc (argmax of the B side -> argmax of the A side) per constraint
/// that is active at v with a finite common value. Throws if v is outside the
/// cone.
DirectedHypergraph tangent_hypergraph(const TropicalSystem& sys, const TropVector& v);

/// Least fixed point containing `source` and closed under: whenever a whole
/// tail is reached, its head is reached. Sorted.
std::vector<int> reachable_from(const DirectedHypergraph& h, int source);

struct SccDecomposition {
    std::vector<std::vector<int>> components;  // sorted internally, ordered by smallest member
    std::vector<int> component_of;             // node -> component index
    std::vector<std::vector<bool>> reaches;    // reachability order between components (reflexive)
    std::optional<int> greatest;               // component reached by every component, if any
};

/// Mutual-reachability classes with the induced reachability order. Pairwise
/// fixed-point reachability is quadratic per node, which is fine at the
/// handful of coordinates these cones have.
SccDecomposition scc_decomposition(const DirectedHypergraph& h);

struct ExtremalityCertificate {
    bool extreme = false;
    DirectedHypergraph hypergraph;
    SccDecomposition scc;
};

/// A cone member is extreme iff the reachability order of its tangent
/// hypergraph components has a greatest element.
ExtremalityCertificate is_extreme(const TropicalSystem& sys, const TropVector& v);

} // namespace ultranear
