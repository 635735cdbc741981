#include "ultranear/metric_trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ultranear {

namespace {

const Rat kZero(0);

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

DissimilarityMap::DissimilarityMap(int n, std::vector<Rat> upper, std::vector<std::string> labels)
    : n_(n), upper_(std::move(upper)), labels_(std::move(labels)) {
    if (n_ < 1) throw ValidationError("dissimilarity map needs at least one item");
    if (static_cast<int>(upper_.size()) != n_ * (n_ - 1) / 2)
        throw ValidationError("upper triangle has wrong length");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw ValidationError("label count does not match item count");
}

DissimilarityMap DissimilarityMap::from_square(const RatMatrix& raw,
                                               std::vector<std::string> labels) {
    const int n = static_cast<int>(raw.size());
    if (n < 1) throw ValidationError("matrix is empty");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(raw[i].size()) != n)
            throw ValidationError("matrix is not square (row " + std::to_string(i + 1) + ")",
                                  i + 1, 0);
    for (int i = 0; i < n; ++i)
        if (raw[i][i] != kZero)
            throw ValidationError("nonzero diagonal at (" + std::to_string(i + 1) + "," +
                                      std::to_string(i + 1) + ")",
                                  i + 1, i + 1);
    std::vector<Rat> upper;
    upper.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (raw[i][j] != raw[j][i])
                throw ValidationError("asymmetry at (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ")",
                                      i + 1, j + 1);
            upper.push_back(raw[i][j]);
        }
    return DissimilarityMap(n, std::move(upper), std::move(labels));
}

const Rat& DissimilarityMap::at(int i, int j) const {
    if (i == j) return kZero;
    return upper_[static_cast<std::size_t>(pair_rank(n_, i, j))];
}

RatMatrix DissimilarityMap::square() const {
    RatMatrix out(static_cast<std::size_t>(n_), std::vector<Rat>(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
    return out;
}

std::string DissimilarityMap::label(int i) const {
    return labels_.empty() ? std::to_string(i + 1) : labels_[static_cast<std::size_t>(i)];
}

DissimilarityMap validate_dissimilarity(const RatMatrix& raw, std::vector<std::string> labels) {
    DissimilarityMap d = DissimilarityMap::from_square(raw, std::move(labels));
    for (int i = 0; i < d.size(); ++i)
        for (int j = i + 1; j < d.size(); ++j)
            if (d.at(i, j) <= kZero)
                throw ValidationError("nonpositive off-diagonal at (" + std::to_string(i + 1) +
                                          "," + std::to_string(j + 1) + ")",
                                      i + 1, j + 1);
    return d;
}

std::optional<TripleWitness> ultrametric_violation(const DissimilarityMap& d) {
    const int n = d.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Rat& x = d.at(i, j);
                const Rat& y = d.at(i, k);
                const Rat& z = d.at(j, k);
                const Rat top = std::max({x, y, z});
                int hits = (x == top) + (y == top) + (z == top);
                if (hits < 2) return TripleWitness{i, j, k};
            }
    return std::nullopt;
}

Ultrametric::Ultrametric(DissimilarityMap map) : map_(std::move(map)) {
    if (auto w = ultrametric_violation(map_))
        throw ValidationError("strengthened triangle inequality fails on triple (" +
                                  std::to_string(w->i + 1) + "," + std::to_string(w->j + 1) + "," +
                                  std::to_string(w->k + 1) + ")",
                              w->i + 1, w->j + 1);
}

WeightedRootedTree WeightedRootedTree::from_nodes(std::vector<Node> nodes, int root,
                                                  int leaf_count) {
    WeightedRootedTree t;
    t.nodes_ = std::move(nodes);
    t.root_ = root;
    t.leaf_count_ = leaf_count;

    const int m = t.node_count();
    if (root < 0 || root >= m) throw ValidationError("tree root out of range");
    if (t.nodes_[static_cast<std::size_t>(root)].parent != -1)
        throw ValidationError("tree root has a parent");

    std::vector<int> seen_leaf(static_cast<std::size_t>(leaf_count), 0);
    std::vector<char> visited(static_cast<std::size_t>(m), 0);
    std::vector<int> stack{root};
    int reached = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (visited[static_cast<std::size_t>(v)]) throw ValidationError("tree contains a cycle");
        visited[static_cast<std::size_t>(v)] = 1;
        ++reached;
        const Node& node = t.nodes_[static_cast<std::size_t>(v)];
        if (node.leaf >= 0) {
            if (!node.children.empty()) throw ValidationError("leaf node has children");
            if (node.leaf >= leaf_count) throw ValidationError("leaf label out of range");
            if (seen_leaf[static_cast<std::size_t>(node.leaf)]++)
                throw ValidationError("duplicate leaf label " + std::to_string(node.leaf + 1));
        } else {
            if (node.children.size() < 2)
                throw ValidationError("internal node needs at least two children");
            for (int c : node.children) {
                if (c < 0 || c >= m) throw ValidationError("child id out of range");
                const Node& child = t.nodes_[static_cast<std::size_t>(c)];
                if (child.parent != v) throw ValidationError("parent link mismatch");
                if (child.leaf < 0 && child.weight > node.weight)
                    throw ValidationError("internal weights must not decrease toward the root");
                stack.push_back(c);
            }
        }
    }
    if (reached != m) throw ValidationError("tree has unreachable nodes");
    for (int leaf = 0; leaf < leaf_count; ++leaf)
        if (!seen_leaf[static_cast<std::size_t>(leaf)])
            throw ValidationError("missing leaf label " + std::to_string(leaf + 1));
    return t;
}

std::vector<int> WeightedRootedTree::internal_nodes() const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
        if (!is_leaf(v)) out.push_back(v);
    return out;
}

std::vector<int> WeightedRootedTree::leaves_below(int v) const {
    std::vector<int> out;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        const Node& node = nodes_[static_cast<std::size_t>(u)];
        if (node.leaf >= 0)
            out.push_back(node.leaf);
        else
            stack.insert(stack.end(), node.children.begin(), node.children.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool WeightedRootedTree::strictly_increasing() const {
    for (int v = 0; v < node_count(); ++v) {
        const Node& node = nodes_[static_cast<std::size_t>(v)];
        if (node.leaf >= 0 || node.parent < 0) continue;
        if (!(node.weight < nodes_[static_cast<std::size_t>(node.parent)].weight)) return false;
    }
    return true;
}

WeightedRootedTree tree_from_ultrametric(const Ultrametric& delta) {
    const int n = delta.size();
    if (n < 2) throw ValidationError("tree encoding needs at least two items");

    std::vector<Rat> values = delta.upper();
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<WeightedRootedTree::Node> nodes(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) nodes[static_cast<std::size_t>(i)].leaf = i;

    Dsu clusters(n);
    std::vector<int> top(static_cast<std::size_t>(n)); // cluster representative -> node id
    std::iota(top.begin(), top.end(), 0);

    for (const Rat& w : values) {
        // Group the clusters joined at this exact threshold; one new internal
        // node absorbs each whole group (equal thresholds never stack).
        Dsu batch(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (delta.at(i, j) == w) batch.unite(clusters.find(i), clusters.find(j));

        std::map<int, std::vector<int>> groups; // batch representative -> cluster reps
        for (int i = 0; i < n; ++i)
            if (clusters.find(i) == i) groups[batch.find(i)].push_back(i);

        for (auto& [rep, members] : groups) {
            if (members.size() < 2) continue;
            WeightedRootedTree::Node merged;
            merged.weight = w;
            std::vector<std::pair<int, int>> ordered; // (smallest leaf, node id)
            for (int cluster_rep : members)
                ordered.emplace_back(cluster_rep, top[static_cast<std::size_t>(cluster_rep)]);
            std::sort(ordered.begin(), ordered.end());
            const int merged_id = static_cast<int>(nodes.size());
            for (auto& [unused, child] : ordered) {
                merged.children.push_back(child);
                nodes[static_cast<std::size_t>(child)].parent = merged_id;
            }
            nodes.push_back(std::move(merged));
            int joined = members.front();
            for (std::size_t k = 1; k < members.size(); ++k) clusters.unite(joined, members[k]);
            top[static_cast<std::size_t>(clusters.find(joined))] = merged_id;
        }
    }

    const int root = top[static_cast<std::size_t>(clusters.find(0))];
    for (int i = 0; i < n; ++i)
        if (clusters.find(i) != clusters.find(0))
            throw ValidationError("ultrametric did not merge into a single tree");
    return WeightedRootedTree::from_nodes(std::move(nodes), root, n);
}

Ultrametric ultrametric_from_tree(const WeightedRootedTree& t, std::vector<std::string> labels) {
    const int n = t.leaf_count();
    std::vector<Rat> upper(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int v : t.internal_nodes()) {
        const auto& children = t.node(v).children;
        std::vector<std::vector<int>> below;
        below.reserve(children.size());
        for (int c : children) below.push_back(t.leaves_below(c));
        for (std::size_t a = 0; a < below.size(); ++a)
            for (std::size_t b = a + 1; b < below.size(); ++b)
                for (int i : below[a])
                    for (int j : below[b])
                        upper[static_cast<std::size_t>(pair_rank(n, i, j))] = t.weight(v);
    }
    return Ultrametric(DissimilarityMap(n, std::move(upper), std::move(labels)));
}

Rat linf_distance(const DissimilarityMap& a, const DissimilarityMap& b) {
    if (a.size() != b.size()) throw ValidationError("size mismatch in distance");
    Rat best(0);
    for (std::size_t k = 0; k < a.upper().size(); ++k) {
        Rat gap = a.upper()[k] - b.upper()[k];
        if (gap < 0) gap = -gap;
        if (gap > best) best = gap;
    }
    return best;
}

namespace {

struct NewickBuilder {
    const WeightedRootedTree& tree;
    NewickStyle style;
    std::span<const std::string> labels;

    std::string leaf_name(int item) const {
        return labels.empty() ? std::to_string(item + 1)
                              : labels[static_cast<std::size_t>(item)];
    }

    void emit(int v, std::ostringstream& out) const {
        const auto& node = tree.node(v);
        if (node.leaf >= 0) {
            out << leaf_name(node.leaf);
        } else {
            std::vector<std::pair<int, int>> ordered; // (smallest leaf below, child)
            for (int c : node.children)
                ordered.emplace_back(tree.leaves_below(c).front(), c);
            std::sort(ordered.begin(), ordered.end());
            out << '(';
            for (std::size_t k = 0; k < ordered.size(); ++k) {
                if (k) out << ',';
                emit(ordered[k].second, out);
            }
            out << ')' << rat_str(node.weight);
        }
        if (style == NewickStyle::BranchLengths && node.parent >= 0) {
            const Rat height = node.leaf >= 0 ? Rat(0) : node.weight;
            out << ':' << rat_str((tree.weight(node.parent) - height) / 2);
        }
    }
};

} // namespace

std::string to_newick(const WeightedRootedTree& t, NewickStyle style,
                      std::span<const std::string> labels) {
    std::ostringstream out;
    NewickBuilder{t, style, labels}.emit(t.root(), out);
    out << ';';
    return out.str();
}

} // namespace ultranear
