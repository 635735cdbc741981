#pragma once

#include "ultranear/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ultranear {

/// Lexicographic rank of the unordered pair {i, j} among all pairs of [n].
/// Items are 0-based here; user-facing output converts to 1-based labels.
inline int pair_rank(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

inline std::pair<int, int> pair_from_rank(int n, int rank) {
    for (int i = 0; i < n - 1; ++i) {
        int row = n - 1 - i;
        if (rank < row) return {i, i + 1 + rank};
        rank -= row;
    }
    throw std::out_of_range("pair_from_rank: rank out of range");
}

/// Symmetric zero-diagonal map of exact rationals on n items, stored as the
/// upper triangle in lexicographic pair order. Strict positivity is an input
/// rule enforced by validate_dissimilarity at the parsing boundary only;
/// derived maps (slid candidates) may carry zero or negative entries and are
/// flagged in reports instead of being rejected.
class DissimilarityMap {
public:
    DissimilarityMap(int n, std::vector<Rat> upper, std::vector<std::string> labels = {});

    /// Structural checks only (square, symmetric, zero diagonal).
    static DissimilarityMap from_square(const RatMatrix& raw, std::vector<std::string> labels = {});

    int size() const { return n_; }
    int pair_count() const { return static_cast<int>(upper_.size()); }

    const Rat& at(int i, int j) const;
    const std::vector<Rat>& upper() const { return upper_; }
    RatMatrix square() const;

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int i) const;

    // Labels are presentation data; equality is on the numeric content.
    friend bool operator==(const DissimilarityMap& a, const DissimilarityMap& b) {
        return a.n_ == b.n_ && a.upper_ == b.upper_;
    }

private:
    int n_;
    std::vector<Rat> upper_;
    std::vector<std::string> labels_;
};

/// Full input validation: square, zero diagonal, symmetric, strictly positive
/// off-diagonal. Throws ValidationError naming the first violated cell.
DissimilarityMap validate_dissimilarity(const RatMatrix& raw, std::vector<std::string> labels = {});

struct TripleWitness {
    int i, j, k; // 0-based
};

/// First triple violating the strengthened triangle inequality, if any.
std::optional<TripleWitness> ultrametric_violation(const DissimilarityMap& d);
inline bool is_ultrametric(const DissimilarityMap& d) { return !ultrametric_violation(d).has_value(); }

/// A DissimilarityMap whose every triple attains its maximum at least twice.
class Ultrametric {
public:
    explicit Ultrametric(DissimilarityMap map);

    const DissimilarityMap& map() const { return map_; }
    const Rat& at(int i, int j) const { return map_.at(i, j); }
    int size() const { return map_.size(); }
    const std::vector<Rat>& upper() const { return map_.upper(); }

    friend bool operator==(const Ultrametric& a, const Ultrametric& b) {
        return a.map_ == b.map_;
    }

private:
    DissimilarityMap map_;
};

/// Rooted tree on leaves [n] with exact rational weights on internal nodes,
/// weakly increasing toward the root. Canonical trees (tree_from_ultrametric
/// output) increase strictly; resolutions temporarily duplicate weights.
class WeightedRootedTree {
public:
    struct Node {
        int parent = -1;
        std::vector<int> children;
        int leaf = -1;  // 0-based item for leaves, -1 for internal nodes
        Rat weight = 0; // meaningful on internal nodes only
    };

    static WeightedRootedTree from_nodes(std::vector<Node> nodes, int root, int leaf_count);

    int root() const { return root_; }
    int leaf_count() const { return leaf_count_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    const Node& node(int v) const { return nodes_[static_cast<std::size_t>(v)]; }
    bool is_leaf(int v) const { return node(v).leaf >= 0; }
    const Rat& weight(int v) const { return node(v).weight; }

    std::vector<int> internal_nodes() const;
    /// Sorted 0-based items below v (v itself when v is a leaf).
    std::vector<int> leaves_below(int v) const;
    /// True when internal weights increase strictly toward the root.
    bool strictly_increasing() const;

private:
    std::vector<Node> nodes_;
    int root_ = -1;
    int leaf_count_ = 0;
};

/// The unique strictly-increasing tree encoding of an ultrametric, built by
/// grouping items at each distinct value (single linkage at exact thresholds).
WeightedRootedTree tree_from_ultrametric(const Ultrametric& delta);

/// Map induced by a tree: entry (i, j) is the weight of the lowest common
/// ancestor of leaves i and j.
Ultrametric ultrametric_from_tree(const WeightedRootedTree& t, std::vector<std::string> labels = {});

Rat linf_distance(const DissimilarityMap& a, const DissimilarityMap& b);

enum class NewickStyle {
    NodeWeights,   // internal weights as node labels: "((1,2)4,3)6;"
    BranchLengths, // adds ":len" with len = (parent weight - height)/2, leaves at height 0
};

std::string to_newick(const WeightedRootedTree& t,
                      NewickStyle style = NewickStyle::NodeWeights,
                      std::span<const std::string> labels = {});

} // namespace ultranear
