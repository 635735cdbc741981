#pragma once

#include "ultranear/metric_trees.hpp"

namespace ultranear {

struct MstEdge {
    int i, j; // 0-based, i < j
    Rat weight;

    friend bool operator==(const MstEdge& a, const MstEdge& b) {
        return a.i == b.i && a.j == b.j && a.weight == b.weight;
    }
};

/// Kruskal on the complete graph with deterministic lexicographic
/// tie-breaking: edges considered in (weight, i, j) order.
std::vector<MstEdge> min_spanning_tree(const DissimilarityMap& d);

/// Subdominant map: entry (i, j) is the maximum edge weight on the spanning
/// tree path between i and j, which equals the min over all paths of the max
/// edge. Always an ultrametric.
DissimilarityMap bottleneck_map(const DissimilarityMap& d);

struct NearestResult {
    Ultrametric delta_star;         // one nearest ultrametric: d_star + q off-diagonal
    Rat q;                          // optimal distance, half the gap to the subdominant
    DissimilarityMap d_star;        // bottleneck map
    std::vector<MstEdge> mst_edges;
};

NearestResult nearest_ultrametric(const DissimilarityMap& d);

} // namespace ultranear
