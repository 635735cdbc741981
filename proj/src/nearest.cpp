#include "ultranear/nearest.hpp"

#include <algorithm>
#include <numeric>

namespace ultranear {

std::vector<MstEdge> min_spanning_tree(const DissimilarityMap& d) {
    const int n = d.size();
    if (n < 2) throw ValidationError("spanning tree needs at least two items");

    std::vector<MstEdge> edges;
    edges.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, d.at(i, j)});
    std::stable_sort(edges.begin(), edges.end(), [](const MstEdge& a, const MstEdge& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });

    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };

    std::vector<MstEdge> tree;
    tree.reserve(static_cast<std::size_t>(n - 1));
    for (const MstEdge& e : edges) {
        const int a = find(e.i), b = find(e.j);
        if (a == b) continue;
        parent[static_cast<std::size_t>(b)] = a;
        tree.push_back(e);
        if (static_cast<int>(tree.size()) == n - 1) break;
    }
    return tree;
}

DissimilarityMap bottleneck_map(const DissimilarityMap& d) {
    const int n = d.size();
    const std::vector<MstEdge> tree = min_spanning_tree(d);

    std::vector<std::vector<std::pair<int, Rat>>> adjacency(static_cast<std::size_t>(n));
    for (const MstEdge& e : tree) {
        adjacency[static_cast<std::size_t>(e.i)].emplace_back(e.j, e.weight);
        adjacency[static_cast<std::size_t>(e.j)].emplace_back(e.i, e.weight);
    }

    std::vector<Rat> upper(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int src = 0; src < n; ++src) {
        // Max edge along the unique tree path, grown outward from src.
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<std::pair<int, Rat>> stack{{src, Rat(0)}};
        seen[static_cast<std::size_t>(src)] = 1;
        while (!stack.empty()) {
            auto [v, running] = stack.back();
            stack.pop_back();
            if (v > src) upper[static_cast<std::size_t>(pair_rank(n, src, v))] = running;
            for (const auto& [next, w] : adjacency[static_cast<std::size_t>(v)]) {
                if (seen[static_cast<std::size_t>(next)]) continue;
                seen[static_cast<std::size_t>(next)] = 1;
                stack.emplace_back(next, std::max(running, w));
            }
        }
    }
    return DissimilarityMap(n, std::move(upper), d.labels());
}

NearestResult nearest_ultrametric(const DissimilarityMap& d) {
    DissimilarityMap subdominant = bottleneck_map(d);
    const Rat q = linf_distance(subdominant, d) / 2;

    std::vector<Rat> shifted = subdominant.upper();
    for (Rat& entry : shifted) entry += q;
    Ultrametric delta_star(DissimilarityMap(d.size(), std::move(shifted), d.labels()));

    return NearestResult{std::move(delta_star), q, std::move(subdominant), min_spanning_tree(d)};
}

} // namespace ultranear
