#include "ultranear/metric_trees.hpp"

#include "golden.hpp"
#include "ultranear/datasets.hpp"

#include <doctest.h>

#include <random>

using namespace ultranear;

namespace {

RatMatrix square(std::initializer_list<std::initializer_list<int>> rows) {
    RatMatrix out;
    for (const auto& row : rows) {
        out.emplace_back();
        for (int v : row) out.back().emplace_back(v);
    }
    return out;
}

Ultrametric metric_from_upper(int n, std::vector<Rat> upper) {
    return Ultrametric(DissimilarityMap(n, std::move(upper)));
}

// Independent formulation of the strengthened triangle inequality: every
// ordered triple satisfies d_ik <= max(d_ij, d_jk).
bool eq5_direct(const DissimilarityMap& d) {
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j)
            for (int k = 0; k < d.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                if (d.at(i, k) > std::max(d.at(i, j), d.at(j, k))) return false;
            }
    return true;
}

DissimilarityMap random_map(std::mt19937_64& rng, int n, int lo = 1, int hi = 12) {
    std::uniform_int_distribution<int> entry(lo, hi);
    std::vector<Rat> upper;
    for (int k = 0; k < n * (n - 1) / 2; ++k) upper.emplace_back(entry(rng));
    return DissimilarityMap(n, std::move(upper));
}

WeightedRootedTree random_ultrametric_tree(std::mt19937_64& rng, int n) {
    // Random single-linkage shape: merge random cluster groups at increasing
    // integer heights.
    std::vector<int> top(static_cast<std::size_t>(n));
    std::vector<WeightedRootedTree::Node> nodes(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        nodes[static_cast<std::size_t>(i)].leaf = i;
        top[static_cast<std::size_t>(i)] = i;
    }
    int height = 0;
    std::uniform_int_distribution<int> bump(1, 4);
    while (top.size() > 1) {
        height += bump(rng);
        std::shuffle(top.begin(), top.end(), rng);
        std::uniform_int_distribution<int> pick(2, static_cast<int>(top.size()));
        const int take = pick(rng);
        WeightedRootedTree::Node merged;
        merged.weight = height;
        const int id = static_cast<int>(nodes.size());
        for (int k = 0; k < take; ++k) {
            merged.children.push_back(top.back());
            nodes[static_cast<std::size_t>(top.back())].parent = id;
            top.pop_back();
        }
        nodes.push_back(std::move(merged));
        top.push_back(id);
    }
    return WeightedRootedTree::from_nodes(std::move(nodes), top.front(), n);
}

} // namespace

TEST_CASE("validate_dissimilarity") {
    SUBCASE("accepts the bundled 3-item matrix") {
        const DissimilarityMap d = validate_dissimilarity(square({{0, 2, 4}, {2, 0, 8}, {4, 8, 0}}));
        CHECK(d.size() == 3);
        CHECK(d.at(0, 1) == 2);
        CHECK(d.at(2, 1) == 8);
    }
    SUBCASE("rejects asymmetry naming the cell") {
        try {
            validate_dissimilarity(square({{0, 2, 4}, {3, 0, 8}, {4, 8, 0}}));
            FAIL("expected a validation error");
        } catch (const ValidationError& err) {
            CHECK(err.row() == 1);
            CHECK(err.col() == 2);
        }
    }
    SUBCASE("accepts the degenerate single item") {
        CHECK(validate_dissimilarity(square({{0}})).size() == 1);
    }
    SUBCASE("rejects nonzero diagonal") {
        CHECK_THROWS_AS(validate_dissimilarity(square({{1}})), ValidationError);
    }
    SUBCASE("rejects nonpositive off-diagonal") {
        CHECK_THROWS_AS(validate_dissimilarity(square({{0, 0}, {0, 0}})), ValidationError);
    }
    SUBCASE("rejects non-square input") {
        RatMatrix ragged = square({{0, 1}, {1, 0}});
        ragged[1].pop_back();
        CHECK_THROWS_AS(validate_dissimilarity(ragged), ValidationError);
    }
}

TEST_CASE("ultrametric recognition") {
    CHECK(is_ultrametric(DissimilarityMap(3, golden::upper({4, 6, 6}))));
    CHECK(is_ultrametric(DissimilarityMap(3, golden::upper({7, 7, 7}))));

    const auto witness = ultrametric_violation(DissimilarityMap(3, golden::upper({2, 4, 8})));
    REQUIRE(witness.has_value());
    CHECK(witness->i == 0);
    CHECK(witness->j == 1);
    CHECK(witness->k == 2);

    CHECK_THROWS_AS(Ultrametric(DissimilarityMap(3, golden::upper({2, 4, 8}))), ValidationError);
}

TEST_CASE("the two formulations of the strengthened inequality agree") {
    std::mt19937_64 rng(31);
    int ultrametric_hits = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const DissimilarityMap d = random_map(rng, 4, 1, 6);
        const bool max_twice = is_ultrametric(d);
        CHECK(max_twice == eq5_direct(d));
        ultrametric_hits += max_twice;
    }
    CHECK(ultrametric_hits > 0); // the sample covers both outcomes
    CHECK(ultrametric_hits < 400);
}

TEST_CASE("tree_from_ultrametric") {
    SUBCASE("two-level tree") {
        const WeightedRootedTree t = tree_from_ultrametric(metric_from_upper(3, golden::upper({4, 6, 6})));
        CHECK(to_newick(t) == "((1,2)4,3)6;");
        CHECK(t.strictly_increasing());
    }
    SUBCASE("equal entries collapse to a star") {
        const WeightedRootedTree t = tree_from_ultrametric(metric_from_upper(3, golden::upper({7, 7, 7})));
        CHECK(to_newick(t) == "(1,2,3)7;");
    }
    SUBCASE("grouping thresholds of the bundled n=4 optimum") {
        const WeightedRootedTree t = tree_from_ultrametric(metric_from_upper(4, golden::n4_delta_star));
        CHECK(to_newick(t) == "((1,4)9,2,3)10;");
    }
}

TEST_CASE("ultrametric_from_tree") {
    const WeightedRootedTree t = tree_from_ultrametric(metric_from_upper(3, golden::upper({4, 6, 6})));
    CHECK(ultrametric_from_tree(t).upper() == golden::upper({4, 6, 6}));

    SUBCASE("star tree") {
        const WeightedRootedTree star = tree_from_ultrametric(metric_from_upper(4, golden::upper({7, 7, 7, 7, 7, 7})));
        CHECK(ultrametric_from_tree(star).upper() == std::vector<Rat>(6, Rat(7)));
    }
    SUBCASE("round trip over the 16 reference rays") {
        for (const auto& column : reference_rays_n8()) {
            const Ultrametric ray = metric_from_upper(8, column);
            CHECK(ultrametric_from_tree(tree_from_ultrametric(ray)) == ray);
        }
    }
}

TEST_CASE("round trip holds on random trees and keeps strict weights") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> sizes(2, 8);
        const WeightedRootedTree t = random_ultrametric_tree(rng, sizes(rng));
        const Ultrametric delta = ultrametric_from_tree(t);
        const WeightedRootedTree back = tree_from_ultrametric(delta);
        CHECK(back.strictly_increasing());
        CHECK(ultrametric_from_tree(back) == delta);
        CHECK(to_newick(back) == to_newick(t)); // same canonical shape
    }
}

TEST_CASE("linf_distance") {
    const DissimilarityMap d3(3, golden::upper({2, 4, 8}));
    CHECK(linf_distance(d3, DissimilarityMap(3, golden::n3_delta_star)) == 2);
    CHECK(linf_distance(d3, d3) == 0);
    CHECK(linf_distance(paper_n4(), DissimilarityMap(4, golden::n4_delta_star)) == 4);
    CHECK_THROWS_AS(linf_distance(d3, paper_n4()), ValidationError);

    SUBCASE("metric axioms on random triples") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 200; ++trial) {
            const DissimilarityMap a = random_map(rng, 4), b = random_map(rng, 4),
                                   c = random_map(rng, 4);
            CHECK(linf_distance(a, b) == linf_distance(b, a));
            CHECK(linf_distance(a, a) == 0);
            CHECK(linf_distance(a, c) <= linf_distance(a, b) + linf_distance(b, c));
        }
    }
}

TEST_CASE("newick serialization") {
    const WeightedRootedTree t = tree_from_ultrametric(metric_from_upper(3, golden::upper({4, 6, 6})));
    CHECK(to_newick(t) == "((1,2)4,3)6;");
    CHECK(to_newick(t, NewickStyle::BranchLengths) == "((1:2,2:2)4:1,3:3)6;");

    const WeightedRootedTree pair = tree_from_ultrametric(metric_from_upper(2, golden::upper({9})));
    CHECK(to_newick(pair) == "(1,2)9;");

    SUBCASE("labels are used when present") {
        const std::vector<std::string> labels{"a", "b", "c"};
        CHECK(to_newick(t, NewickStyle::NodeWeights, labels) == "((a,b)4,c)6;");
    }
    SUBCASE("half-integer weights serialize as fractions") {
        std::vector<Rat> upper{Rat(9, 2)};
        const WeightedRootedTree half = tree_from_ultrametric(metric_from_upper(2, std::move(upper)));
        CHECK(to_newick(half) == "(1,2)9/2;");
    }
}
