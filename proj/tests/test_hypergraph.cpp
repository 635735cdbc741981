#include "ultranear/hypergraph.hpp"

#include "ultranear/datasets.hpp"
#include "ultranear/nearest.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace ultranear;

namespace {

TropVector vec(std::initializer_list<int> values) {
    std::vector<TropScalar> entries;
    for (int v : values) entries.push_back(TropScalar(Rat(v)));
    return TropVector(std::move(entries));
}

// Arc set of a hypergraph whose arcs are all plain edges. Coordinates:
// 0 = xi, 1 = d_12, 2 = d_13, 3 = d_23.
std::set<std::pair<int, int>> edge_set(const DirectedHypergraph& h) {
    std::set<std::pair<int, int>> out;
    for (const Hyperarc& arc : h.arcs) {
        REQUIRE(arc.tail.size() == 1);
        REQUIRE(arc.head.size() == 1);
        out.emplace(arc.tail.front(), arc.head.front());
    }
    return out;
}

std::set<int> component_of_node(const SccDecomposition& scc, int node) {
    const auto& members = scc.components[static_cast<std::size_t>(scc.component_of[static_cast<std::size_t>(node)])];
    return {members.begin(), members.end()};
}

DirectedHypergraph random_hypergraph(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nodes(2, 8), arcs(0, 12), size(1, 2);
    DirectedHypergraph h;
    h.node_count = nodes(rng);
    std::uniform_int_distribution<int> node(0, h.node_count - 1);
    const int m = arcs(rng);
    for (int k = 0; k < m; ++k) {
        std::set<int> tail, head;
        for (int t = size(rng); t > 0; --t) tail.insert(node(rng));
        for (int t = size(rng); t > 0; --t) head.insert(node(rng));
        h.arcs.push_back(Hyperarc{{tail.begin(), tail.end()}, {head.begin(), head.end()}, k});
    }
    return h;
}

} // namespace

TEST_CASE("tangent hypergraph of the worked 3-item system") {
    const TropicalSystem sys = build_exterior(paper_n3(), Rat(2));

    SUBCASE("non-extreme vector") {
        const DirectedHypergraph h = tangent_hypergraph(sys, vec({0, 2, 6, 6}));
        CHECK(h.node_count == 4);
        CHECK(edge_set(h) == std::set<std::pair<int, int>>{{3, 2}, {2, 3}, {3, 0}, {0, 2}});
        CHECK_FALSE(h.has_multi_node_tail());
    }
    SUBCASE("extreme vector gains the d_12 -> xi arc") {
        const DirectedHypergraph h = tangent_hypergraph(sys, vec({0, 0, 6, 6}));
        CHECK(edge_set(h) == std::set<std::pair<int, int>>{{3, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 0}});
    }
    SUBCASE("vectors outside the cone are rejected") {
        CHECK_THROWS_AS(tangent_hypergraph(sys, vec({0, 0, 0, 0})), ValidationError);
    }
    SUBCASE("strict interior of a two-item system gives no arcs") {
        const TropicalSystem tiny = build_exterior(DissimilarityMap(2, {Rat(3)}), Rat(1));
        const DirectedHypergraph h = tangent_hypergraph(tiny, vec({0, 3}));
        CHECK(h.arcs.empty());
    }
}

TEST_CASE("reachable_from") {
    DirectedHypergraph h;
    h.node_count = 4;
    auto edge = [](int a, int b) { return Hyperarc{{a}, {b}, -1}; };

    SUBCASE("chain with a cycle back to xi") {
        h.arcs = {edge(1, 0), edge(0, 2), edge(2, 3), edge(3, 0)};
        CHECK(reachable_from(h, 1) == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("d_12 stays unreachable from xi") {
        h.arcs = {edge(3, 2), edge(2, 3), edge(3, 0), edge(0, 2)};
        CHECK(reachable_from(h, 0) == std::vector<int>{0, 2, 3});
    }
    SUBCASE("empty hypergraph reaches only the source") {
        h.arcs.clear();
        CHECK(reachable_from(h, 2) == std::vector<int>{2});
    }
    SUBCASE("a multi-node tail fires only once the whole tail is reached") {
        h.arcs = {Hyperarc{{0}, {1}, -1}, Hyperarc{{1, 2}, {3}, -1}};
        CHECK(reachable_from(h, 0) == std::vector<int>{0, 1});
        h.arcs.push_back(Hyperarc{{0}, {2}, -1});
        CHECK(reachable_from(h, 0) == std::vector<int>{0, 1, 2, 3});
    }
}

TEST_CASE("scc decomposition of the worked examples") {
    const TropicalSystem sys = build_exterior(paper_n3(), Rat(2));

    SUBCASE("extreme vector has a greatest component") {
        const SccDecomposition scc = scc_decomposition(tangent_hypergraph(sys, vec({0, 0, 6, 6})));
        CHECK(scc.components.size() == 2);
        CHECK(component_of_node(scc, 0) == std::set<int>{0, 2, 3});
        CHECK(component_of_node(scc, 1) == std::set<int>{1});
        REQUIRE(scc.greatest.has_value());
        CHECK(scc.components[static_cast<std::size_t>(*scc.greatest)] == std::vector<int>{0, 2, 3});
    }
    SUBCASE("non-extreme vector has two incomparable components") {
        const SccDecomposition scc = scc_decomposition(tangent_hypergraph(sys, vec({0, 2, 6, 6})));
        CHECK(scc.components.size() == 2);
        CHECK_FALSE(scc.greatest.has_value());
    }
    SUBCASE("empty hypergraph shatters into singletons") {
        DirectedHypergraph h;
        h.node_count = 5;
        const SccDecomposition scc = scc_decomposition(h);
        CHECK(scc.components.size() == 5);
        CHECK_FALSE(scc.greatest.has_value());
    }
}

TEST_CASE("reachability is a preorder and the component order is antisymmetric") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const DirectedHypergraph h = random_hypergraph(rng);

        std::vector<std::vector<int>> reach;
        for (int u = 0; u < h.node_count; ++u) reach.push_back(reachable_from(h, u));
        for (int u = 0; u < h.node_count; ++u) {
            CHECK(std::binary_search(reach[static_cast<std::size_t>(u)].begin(),
                                     reach[static_cast<std::size_t>(u)].end(), u));
            for (int v : reach[static_cast<std::size_t>(u)])
                for (int w : reach[static_cast<std::size_t>(v)])
                    CHECK(std::binary_search(reach[static_cast<std::size_t>(u)].begin(),
                                             reach[static_cast<std::size_t>(u)].end(), w));
        }

        const SccDecomposition scc = scc_decomposition(h);
        int covered = 0;
        for (const auto& component : scc.components) covered += static_cast<int>(component.size());
        CHECK(covered == h.node_count);
        for (std::size_t a = 0; a < scc.components.size(); ++a)
            for (std::size_t b = 0; b < scc.components.size(); ++b) {
                if (a == b) continue;
                const bool mutual = scc.reaches[a][b] && scc.reaches[b][a];
                CHECK_FALSE(mutual);
            }
        if (scc.greatest)
            for (std::size_t a = 0; a < scc.components.size(); ++a)
                CHECK(scc.reaches[a][static_cast<std::size_t>(*scc.greatest)]);
    }
}

TEST_CASE("is_extreme on the worked vectors") {
    const TropicalSystem sys = build_exterior(paper_n3(), Rat(2));
    CHECK(is_extreme(sys, vec({0, 0, 6, 6})).extreme);
    CHECK_FALSE(is_extreme(sys, vec({0, 2, 6, 6})).extreme);

    SUBCASE("zero-gap instance is one big component") {
        // d_12 <= d_13 = d_23 forces q = 0.
        const DissimilarityMap d(3, {Rat(3), Rat(7), Rat(7)});
        const NearestResult nr = nearest_ultrametric(d);
        REQUIRE(nr.q == 0);
        const TropicalSystem zero = build_exterior(d, nr.q);
        const ExtremalityCertificate cert = is_extreme(zero, homogenize(nr.delta_star));
        CHECK(cert.extreme);
        CHECK(cert.scc.components.size() == 1);
        CHECK(cert.scc.components.front() == std::vector<int>{0, 1, 2, 3});
    }
}

TEST_CASE("parameterized case analysis for three items") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<int> low(1, 97);

    SUBCASE("distinct entries: both candidate rays are extreme") {
        for (int trial = 0; trial < 100; ++trial) {
            int a = low(rng), b = a + 1 + low(rng) % 3, c = b + 2 + 2 * (low(rng) % 3);
            const DissimilarityMap d(3, {Rat(a), Rat(b), Rat(c)});
            const Rat q = Rat(c - b) / 2;
            const TropicalSystem sys = build_exterior(d, q);

            TropVector stay(4), slid(4);
            stay[0] = slid[0] = TropScalar(Rat(0));
            stay[1] = TropScalar(Rat(a) + q);
            slid[1] = TropScalar(Rat(a) - q);
            stay[2] = slid[2] = TropScalar(Rat(b) + q);
            stay[3] = slid[3] = TropScalar(Rat(b) + q);

            const ExtremalityCertificate first = is_extreme(sys, stay);
            REQUIRE(first.extreme);
            CHECK(first.scc.components[static_cast<std::size_t>(*first.scc.greatest)] ==
                  std::vector<int>{1});

            const ExtremalityCertificate second = is_extreme(sys, slid);
            REQUIRE(second.extreme);
            CHECK(second.scc.components[static_cast<std::size_t>(*second.scc.greatest)] ==
                  std::vector<int>{0, 2, 3});
        }
    }
    SUBCASE("tied small entries: the two resolution rays are extreme") {
        for (int trial = 0; trial < 100; ++trial) {
            int a = low(rng), c = a + 2 + 2 * (low(rng) % 5);
            const DissimilarityMap d(3, {Rat(a), Rat(a), Rat(c)});
            const Rat q = Rat(c - a) / 2;
            const TropicalSystem sys = build_exterior(d, q);

            TropVector first(4), second(4);
            first[0] = second[0] = TropScalar(Rat(0));
            first[1] = TropScalar(Rat(a) + q);
            first[2] = TropScalar(Rat(a) - q);
            first[3] = TropScalar(Rat(a) + q);
            second[1] = TropScalar(Rat(a) - q);
            second[2] = TropScalar(Rat(a) + q);
            second[3] = TropScalar(Rat(a) + q);

            const ExtremalityCertificate one = is_extreme(sys, first);
            REQUIRE(one.extreme);
            CHECK(one.scc.components[static_cast<std::size_t>(*one.scc.greatest)] ==
                  std::vector<int>{0, 1, 3});

            const ExtremalityCertificate two = is_extreme(sys, second);
            REQUIRE(two.extreme);
            CHECK(two.scc.components[static_cast<std::size_t>(*two.scc.greatest)] ==
                  std::vector<int>{0, 2, 3});
        }
    }
}
