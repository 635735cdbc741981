#pragma once

#include "ultranear/metric_trees.hpp"
#include "ultranear/nearest.hpp"

namespace ultranear {

struct SlideStep {
    std::string resolution;   // newick of the resolved tree the slide acted on
    std::vector<int> cluster; // leaves below the slid node, 0-based, sorted
    Rat from_weight;
    Rat to_weight;
};

struct CandidateState {
    Ultrametric metric;
    WeightedRootedTree tree; // canonical encoding of `metric`
    std::vector<SlideStep> provenance;
};

/// All binary refinements of t. Every node with k > 2 children is replaced by
/// every binary arrangement of its children; new internal nodes carry the
/// weight of the node they refine. Deduplicated on the labeled shape.
std::vector<WeightedRootedTree> resolutions(const WeightedRootedTree& t);

/// Lowest weight node v can take with all other weights fixed while the
/// induced map stays an ultrametric at distance at most q from d: the max of
/// its internal children's weights and of d_ij - q over leaf pairs whose
/// lowest common ancestor is v.
Rat slide_floor(const WeightedRootedTree& t, int v, const DissimilarityMap& d, const Rat& q);

bool is_mobile(const WeightedRootedTree& t, int v, const DissimilarityMap& d, const Rat& q);

/// Sets v's weight to its floor inside `resolution`, recomputes the map and
/// re-canonicalizes the tree (equal weights merge, so the topology may become
/// non-binary again). Throws if v is immobile.
CandidateState slide_all_the_way_down(const CandidateState& state,
                                      const WeightedRootedTree& resolution, int v,
                                      const DissimilarityMap& d, const Rat& q);

/// How the "at most one mobile internal node" filter counts mobility when a
/// topology has several resolutions.
enum class MobilityQuantifier {
    AllResolutions, // distinct mobile clusters accumulated across all resolutions
    PerResolution,  // every single resolution must have at most one mobile node
};

struct CandidateInfo {
    CandidateState state;
    std::vector<std::vector<int>> mobile_clusters; // distinct clusters mobile in some resolution
    int max_mobile_per_resolution = 0;
    bool nonpositive_entries = false;

    bool passes(MobilityQuantifier quantifier) const {
        return quantifier == MobilityQuantifier::AllResolutions
                   ? mobile_clusters.size() <= 1
                   : max_mobile_per_resolution <= 1;
    }
};

struct CandidateSet {
    Rat q;
    std::vector<CandidateInfo> all; // deduplicated closure, lexicographic by vector
    std::vector<int> bernstein;     // indices into `all` under the chosen quantifier
    MobilityQuantifier quantifier = MobilityQuantifier::AllResolutions;

    int bernstein_count(MobilityQuantifier q_) const {
        int count = 0;
        for (const auto& info : all)
            if (info.passes(q_)) ++count;
        return count;
    }
};

/// Clusters of nodes mobile in some resolution of `canonical`; optionally the
/// largest per-resolution mobile count.
std::vector<std::vector<int>> mobile_clusters(const WeightedRootedTree& canonical,
                                              const DissimilarityMap& d, const Rat& q,
                                              int* max_per_resolution = nullptr);

/// Breadth-first closure from the subdominant-based nearest ultrametric over
/// (resolution, mobile node) slide moves, with exact-equality deduplication.
CandidateSet bernstein_candidates(const DissimilarityMap& d,
                                  MobilityQuantifier quantifier = MobilityQuantifier::AllResolutions);
CandidateSet bernstein_candidates(const DissimilarityMap& d, const NearestResult& nearest,
                                  MobilityQuantifier quantifier = MobilityQuantifier::AllResolutions);

} // namespace ultranear
