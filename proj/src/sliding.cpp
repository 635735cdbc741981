#include "ultranear/sliding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <set>

namespace ultranear {

namespace {

// Leaf-labeled rooted binary shapes over items 0..k-1, as nested pairs.
struct Shape {
    int item = -1; // >= 0 for shape leaves
    std::unique_ptr<Shape> left, right;

    std::unique_ptr<Shape> clone() const {
        auto out = std::make_unique<Shape>();
        out->item = item;
        if (left) out->left = left->clone();
        if (right) out->right = right->clone();
        return out;
    }
};

void collect_nodes(Shape* s, std::vector<Shape*>& out) {
    out.push_back(s);
    if (s->left) collect_nodes(s->left.get(), out);
    if (s->right) collect_nodes(s->right.get(), out);
}

// All (2k-3)!! shapes, built by inserting item m above every node of every
// shape on m items.
std::vector<std::unique_ptr<Shape>> binary_shapes(int k) {
    std::vector<std::unique_ptr<Shape>> shapes;
    auto first = std::make_unique<Shape>();
    first->item = 0;
    shapes.push_back(std::move(first));
    for (int m = 1; m < k; ++m) {
        std::vector<std::unique_ptr<Shape>> grown;
        for (const auto& shape : shapes) {
            std::vector<Shape*> positions;
            {
                auto probe = shape->clone();
                collect_nodes(probe.get(), positions);
            }
            const std::size_t spots = positions.size();
            for (std::size_t p = 0; p < spots; ++p) {
                auto copy = shape->clone();
                std::vector<Shape*> nodes;
                collect_nodes(copy.get(), nodes);
                Shape* target = nodes[p];
                auto displaced = std::make_unique<Shape>();
                std::swap(*displaced, *target);
                auto leaf = std::make_unique<Shape>();
                leaf->item = m;
                target->item = -1;
                target->left = std::move(displaced);
                target->right = std::move(leaf);
                grown.push_back(std::move(copy));
            }
        }
        shapes = std::move(grown);
    }
    return shapes;
}

std::map<int, std::vector<std::unique_ptr<Shape>>>& shape_cache() {
    static std::map<int, std::vector<std::unique_ptr<Shape>>> cache;
    return cache;
}

const std::vector<std::unique_ptr<Shape>>& shapes_for(int k) {
    auto& cache = shape_cache();
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, binary_shapes(k)).first;
    return it->second;
}

using Node = WeightedRootedTree::Node;

// Recursive resolver: every internal node with more than two children is
// expanded through every binary shape over its children, the new internal
// nodes inheriting its weight.
struct Resolver {
    const WeightedRootedTree& tree;
    std::vector<std::vector<int>> choices; // per original node: shape indices (size 1 when binary)

    explicit Resolver(const WeightedRootedTree& t) : tree(t) {
        choices.resize(static_cast<std::size_t>(t.node_count()));
        for (int v = 0; v < t.node_count(); ++v) {
            const int k = static_cast<int>(t.node(v).children.size());
            const int variants = (k > 2) ? static_cast<int>(shapes_for(k).size()) : 1;
            auto& slot = choices[static_cast<std::size_t>(v)];
            slot.resize(static_cast<std::size_t>(variants));
            for (int i = 0; i < variants; ++i) slot[static_cast<std::size_t>(i)] = i;
        }
    }

    int build_shape(const Shape* shape, const std::vector<int>& child_roots, const Rat& weight,
                    std::vector<Node>& nodes, const std::vector<int>& combo) const {
        if (shape->item >= 0) return child_roots[static_cast<std::size_t>(shape->item)];
        const int left = build_shape(shape->left.get(), child_roots, weight, nodes, combo);
        const int right = build_shape(shape->right.get(), child_roots, weight, nodes, combo);
        Node inner;
        inner.weight = weight;
        inner.children = {left, right};
        const int id = static_cast<int>(nodes.size());
        nodes.push_back(std::move(inner));
        nodes[static_cast<std::size_t>(left)].parent = id;
        nodes[static_cast<std::size_t>(right)].parent = id;
        return id;
    }

    int build(int v, std::vector<Node>& nodes, const std::vector<int>& combo) const {
        const Node& original = tree.node(v);
        if (original.leaf >= 0) {
            Node leaf;
            leaf.leaf = original.leaf;
            nodes.push_back(std::move(leaf));
            return static_cast<int>(nodes.size()) - 1;
        }
        std::vector<int> child_roots;
        child_roots.reserve(original.children.size());
        for (int c : original.children) child_roots.push_back(build(c, nodes, combo));

        const int k = static_cast<int>(original.children.size());
        if (k <= 2) {
            Node copy;
            copy.weight = original.weight;
            copy.children = child_roots;
            const int id = static_cast<int>(nodes.size());
            nodes.push_back(std::move(copy));
            for (int c : child_roots) nodes[static_cast<std::size_t>(c)].parent = id;
            return id;
        }
        const Shape* shape =
            shapes_for(k)[static_cast<std::size_t>(combo[static_cast<std::size_t>(v)])].get();
        return build_shape(shape, child_roots, original.weight, nodes, combo);
    }
};

bool all_binary(const WeightedRootedTree& t) {
    for (int v : t.internal_nodes())
        if (t.node(v).children.size() > 2) return false;
    return true;
}

} // namespace

std::vector<WeightedRootedTree> resolutions(const WeightedRootedTree& t) {
    if (all_binary(t)) return {t};

    Resolver resolver(t);
    std::vector<int> combo(static_cast<std::size_t>(t.node_count()), 0);
    std::vector<WeightedRootedTree> out;
    std::set<std::string> seen;
    while (true) {
        std::vector<Node> nodes;
        const int root = resolver.build(t.root(), nodes, combo);
        WeightedRootedTree resolved =
            WeightedRootedTree::from_nodes(std::move(nodes), root, t.leaf_count());
        if (seen.insert(to_newick(resolved)).second) out.push_back(std::move(resolved));

        // Mixed-radix increment over the per-node shape choices.
        int v = 0;
        for (; v < t.node_count(); ++v) {
            auto& slot = resolver.choices[static_cast<std::size_t>(v)];
            if (combo[static_cast<std::size_t>(v)] + 1 < static_cast<int>(slot.size())) {
                ++combo[static_cast<std::size_t>(v)];
                break;
            }
            combo[static_cast<std::size_t>(v)] = 0;
        }
        if (v == t.node_count()) break;
    }
    return out;
}

Rat slide_floor(const WeightedRootedTree& t, int v, const DissimilarityMap& d, const Rat& q) {
    if (t.is_leaf(v)) throw ValidationError("slide floor is defined on internal nodes only");
    const auto& children = t.node(v).children;

    bool has_bound = false;
    Rat floor(0);
    auto raise = [&](const Rat& candidate) {
        if (!has_bound || candidate > floor) floor = candidate;
        has_bound = true;
    };

    for (int c : children)
        if (!t.is_leaf(c)) raise(t.weight(c));

    std::vector<std::vector<int>> below;
    below.reserve(children.size());
    for (int c : children) below.push_back(t.leaves_below(c));
    for (std::size_t a = 0; a < below.size(); ++a)
        for (std::size_t b = a + 1; b < below.size(); ++b)
            for (int i : below[a])
                for (int j : below[b]) raise(d.at(i, j) - q);

    return floor; // some leaf pair always has v as its lowest common ancestor
}

bool is_mobile(const WeightedRootedTree& t, int v, const DissimilarityMap& d, const Rat& q) {
    if (t.is_leaf(v)) return false;
    return slide_floor(t, v, d, q) < t.weight(v);
}

CandidateState slide_all_the_way_down(const CandidateState& state,
                                      const WeightedRootedTree& resolution, int v,
                                      const DissimilarityMap& d, const Rat& q) {
    if (!is_mobile(resolution, v, d, q))
        throw ValidationError("node is not mobile: already at its floor");
    const Rat target = slide_floor(resolution, v, d, q);

    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(resolution.node_count()));
    for (int u = 0; u < resolution.node_count(); ++u) nodes.push_back(resolution.node(u));
    nodes[static_cast<std::size_t>(v)].weight = target;
    WeightedRootedTree slid =
        WeightedRootedTree::from_nodes(std::move(nodes), resolution.root(), resolution.leaf_count());

    Ultrametric metric = ultrametric_from_tree(slid, d.labels());
    if (linf_distance(metric.map(), d) != q)
        throw std::logic_error("slide left the nearest set; floor computation is wrong");

    CandidateState next{metric, tree_from_ultrametric(metric), state.provenance};
    next.provenance.push_back(SlideStep{to_newick(resolution), resolution.leaves_below(v),
                                        resolution.weight(v), target});
    return next;
}

std::vector<std::vector<int>> mobile_clusters(const WeightedRootedTree& canonical,
                                              const DissimilarityMap& d, const Rat& q,
                                              int* max_per_resolution) {
    std::set<std::vector<int>> clusters;
    int worst = 0;
    for (const WeightedRootedTree& resolved : resolutions(canonical)) {
        int here = 0;
        for (int v : resolved.internal_nodes())
            if (is_mobile(resolved, v, d, q)) {
                ++here;
                clusters.insert(resolved.leaves_below(v));
            }
        worst = std::max(worst, here);
    }
    if (max_per_resolution) *max_per_resolution = worst;
    return {clusters.begin(), clusters.end()};
}

CandidateSet bernstein_candidates(const DissimilarityMap& d, MobilityQuantifier quantifier) {
    return bernstein_candidates(d, nearest_ultrametric(d), quantifier);
}

CandidateSet bernstein_candidates(const DissimilarityMap& d, const NearestResult& nearest,
                                  MobilityQuantifier quantifier) {
    if (d.size() < 3) throw ValidationError("candidate generation needs at least three items");
    const Rat& q = nearest.q;

    CandidateSet out;
    out.q = q;
    out.quantifier = quantifier;

    std::set<std::vector<Rat>> seen{nearest.delta_star.upper()};
    std::deque<CandidateState> frontier;
    frontier.push_back(
        CandidateState{nearest.delta_star, tree_from_ultrametric(nearest.delta_star), {}});

    std::vector<CandidateState> closure;
    while (!frontier.empty()) {
        CandidateState current = std::move(frontier.front());
        frontier.pop_front();
        for (const WeightedRootedTree& resolved : resolutions(current.tree)) {
            for (int v : resolved.internal_nodes()) {
                if (!is_mobile(resolved, v, d, q)) continue;
                CandidateState next = slide_all_the_way_down(current, resolved, v, d, q);
                if (seen.insert(next.metric.upper()).second) frontier.push_back(std::move(next));
            }
        }
        closure.push_back(std::move(current));
    }

    std::sort(closure.begin(), closure.end(), [](const CandidateState& a, const CandidateState& b) {
        return a.metric.upper() < b.metric.upper();
    });

    for (CandidateState& state : closure) {
        CandidateInfo info{std::move(state), {}, 0, false};
        info.mobile_clusters =
            mobile_clusters(info.state.tree, d, q, &info.max_mobile_per_resolution);
        for (const Rat& entry : info.state.metric.upper())
            if (entry <= 0) info.nonpositive_entries = true;
        out.all.push_back(std::move(info));
    }
    for (std::size_t idx = 0; idx < out.all.size(); ++idx)
        if (out.all[idx].passes(quantifier)) out.bernstein.push_back(static_cast<int>(idx));
    return out;
}

} // namespace ultranear
