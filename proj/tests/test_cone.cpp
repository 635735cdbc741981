#include "ultranear/cone.hpp"

#include "golden.hpp"
#include "ultranear/datasets.hpp"
#include "ultranear/nearest.hpp"

#include <doctest.h>

#include <random>

using namespace ultranear;

namespace {

TropVector vec(std::initializer_list<int> values) {
    std::vector<TropScalar> entries;
    for (int v : values) entries.push_back(TropScalar(Rat(v)));
    return TropVector(std::move(entries));
}

} // namespace

TEST_CASE("pair indexer") {
    const PairIndexer idx(4);
    CHECK(idx.pairs() == 6);
    CHECK(idx.dim() == 7);
    CHECK(idx.position(0, 1) == 1);
    CHECK(idx.position(1, 0) == 1);
    CHECK(idx.position(2, 3) == 6);
    CHECK(idx.pair_at(6) == std::pair<int, int>{2, 3});
    CHECK(idx.coordinate_name(0) == "xi");
    CHECK(idx.coordinate_name(1) == "d_12");
    CHECK(idx.coordinate_name(6) == "d_34");
    for (int pos = 1; pos < idx.dim(); ++pos) {
        const auto [i, j] = idx.pair_at(pos);
        CHECK(idx.position(i, j) == pos);
    }
}

TEST_CASE("build_exterior reproduces the realized 9x4 system") {
    const TropicalSystem sys = build_exterior(paper_n3(), Rat(2));
    REQUIRE(sys.rows() == 9);
    REQUIRE(sys.cols() == 4);
    CHECK(sys.triple_rows == 3);

    const TropScalar none = TropScalar::bottom();
    const auto a = [&](int r, int c) { return sys.a.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)); };
    const auto b = [&](int r, int c) { return sys.b.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)); };

    // Left side, row by row.
    const TropScalar expect_a[9][4] = {
        {none, 0, none, none}, {none, none, 0, none}, {none, none, none, 0},
        {2, none, none, none}, {4, none, none, none}, {8, none, none, none},
        {none, -2, none, none}, {none, none, -2, none}, {none, none, none, -2}};
    const TropScalar expect_b[9][4] = {
        {none, none, 0, 0}, {none, 0, none, 0}, {none, 0, 0, none},
        {none, 2, none, none}, {none, none, 2, none}, {none, none, none, 2},
        {2, none, none, none}, {4, none, none, none}, {8, none, none, none}};
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 4; ++c) {
            CHECK(a(r, c) == expect_a[r][c]);
            CHECK(b(r, c) == expect_b[r][c]);
        }
}

TEST_CASE("system sizes match the closed forms") {
    CHECK(build_exterior(paper_n4(), Rat(4)).rows() == 24);
    CHECK(build_exterior(paper_n4(), Rat(4)).cols() == 7);
    const TropicalSystem big = build_exterior(paper_n8(), Rat(9));
    CHECK(big.rows() == 224);
    CHECK(big.cols() == 29);

    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> entry(1, 9);
    for (int n = 3; n <= 8; ++n) {
        std::vector<Rat> upper;
        for (int k = 0; k < n * (n - 1) / 2; ++k) upper.emplace_back(entry(rng));
        const TropicalSystem sys = build_exterior(DissimilarityMap(n, std::move(upper)), Rat(1));
        CHECK(sys.rows() == n * n * (n - 1) / 2);
        CHECK(sys.cols() == n * (n - 1) / 2 + 1);
    }

    SUBCASE("two items keep only the distance rows") {
        const TropicalSystem tiny = build_exterior(DissimilarityMap(2, {Rat(3)}), Rat(1));
        CHECK(tiny.triple_rows == 0);
        CHECK(tiny.rows() == 2);
    }
}

TEST_CASE("homogenize and normalize") {
    const PairIndexer idx(3);
    const Ultrametric delta(DissimilarityMap(3, golden::n3_delta_star));
    CHECK(homogenize(delta) == vec({0, 4, 6, 6}));

    CHECK(normalize(vec({0, 0, 6, 6}), idx).upper() == golden::n3_ray_low);
    CHECK(normalize(vec({5, 9, 11, 11}), idx).upper() == golden::n3_delta_star);
    CHECK(normalize(vec({0, 4, 6, 6}), idx).upper() == golden::n3_delta_star);
    CHECK(normalize(homogenize(delta), idx) == delta);

    SUBCASE("bottom auxiliary coordinate is rejected") {
        TropVector v(4);
        v[1] = TropScalar(Rat(1));
        CHECK_THROWS_AS(normalize(v, idx), ValidationError);
    }
    SUBCASE("vectors outside the cone fail the ultrametric check") {
        CHECK_THROWS_AS(normalize(vec({0, 9, 1, 2}), idx), ValidationError);
    }
}

TEST_CASE("check_membership") {
    const TropicalSystem sys = build_exterior(paper_n3(), Rat(2));

    CHECK(check_membership(vec({0, 0, 6, 6}), sys).member);
    CHECK(check_membership(homogenize(nearest_ultrametric(paper_n3()).delta_star), sys).member);

    const Membership bad = check_membership(vec({0, 0, 0, 0}), sys);
    CHECK_FALSE(bad.member);
    // First violated row sits in the upper-bound block (xi + d_13 <= x_13 + q).
    CHECK(bad.violated_row == 4);
    CHECK(sys.row_description(bad.violated_row) == "xi + 4 <= d_13 + 2");
}

TEST_CASE("membership is invariant under tropical scaling") {
    const TropicalSystem sys = build_exterior(paper_n4(), Rat(4));
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> shift(-20, 20), wiggle(-6, 6);
    const std::vector<Rat> base = golden::n4_delta_star;
    for (int trial = 0; trial < 200; ++trial) {
        TropVector v(7);
        v[0] = TropScalar(Rat(0));
        for (std::size_t k = 0; k < 6; ++k)
            v[k + 1] = TropScalar(base[k] + Rat(wiggle(rng)));
        const Membership plain = check_membership(v, sys);
        const Rat c(shift(rng));
        TropVector scaled(7);
        for (std::size_t k = 0; k < 7; ++k) scaled[k] = TropScalar(v[k].value() + c);
        CHECK(check_membership(scaled, sys).member == plain.member);
    }
}

TEST_CASE("membership agrees with the direct polytope characterization") {
    const DissimilarityMap d = paper_n3();
    const NearestResult nr = nearest_ultrametric(d);
    const TropicalSystem sys = build_exterior(d, nr.q);
    const PairIndexer idx(3);

    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> wiggle(-3, 3);
    int members = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Rat> upper = nr.delta_star.upper();
        for (Rat& entry : upper) entry += Rat(wiggle(rng));
        const DissimilarityMap probe(3, upper);

        TropVector v(4);
        v[0] = TropScalar(Rat(0));
        for (std::size_t k = 0; k < 3; ++k) v[k + 1] = TropScalar(upper[k]);

        const bool in_cone = check_membership(v, sys).member;
        const bool direct = is_ultrametric(probe) && linf_distance(probe, d) <= nr.q;
        CHECK(in_cone == direct);
        members += in_cone;
    }
    CHECK(members > 0);
    CHECK(members < 500);
}
