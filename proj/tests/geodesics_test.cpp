#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "cubegeo/generate.hpp"
#include "cubegeo/geodesics.hpp"
#include "support/oracles.hpp"

using namespace cubegeo;

namespace {

CubeSubgraph from_pairs(int n, std::vector<Vertex> vs, std::vector<std::pair<Vertex, Vertex>> pairs) {
    return make_subgraph(n, std::span<const Vertex>(vs), std::span<const std::pair<Vertex, Vertex>>(pairs));
}

std::vector<int> ranks(const DirectionOrdering& ord) {
    std::vector<int> r(static_cast<std::size_t>(ord.size()));
    for (int d = 0; d < ord.size(); ++d) {
        r[d] = ord.rank(d);
    }
    return r;
}

CubeSubgraph random_instance(std::uint64_t seed, int n_lo, int n_hi) {
    Rng pick(seed);
    InstanceSpec spec;
    spec.model = pick.bernoulli(0.5) ? Model::InducedRandom : Model::EdgeRandom;
    spec.n = n_lo + static_cast<int>(pick.below(static_cast<std::uint64_t>(n_hi - n_lo + 1)));
    spec.density = 0.2 + 0.6 * pick.unit();
    spec.seed = pick();
    return generate(spec);
}

} // namespace

TEST(IncreasingTable, SingleEdge) {
    for (Direction d = 0; d < 3; ++d) {
        auto g = from_pairs(3, {0, bit(d)}, {{0, bit(d)}});
        auto t = increasing_geodesic_table(g, DirectionOrdering::identity(3));
        EXPECT_EQ(t.length(0), 1);
        EXPECT_EQ(t.length(bit(d)), 1);
        EXPECT_EQ(t.total(), 2);
        auto p = extract_increasing_geodesic(t, bit(d));
        EXPECT_EQ(p.vertices, (std::vector<Vertex>{0, bit(d)}));
    }
}

TEST(IncreasingTable, SquareIdentity) {
    auto t = increasing_geodesic_table(full_cube(2), DirectionOrdering::identity(2));
    for (Vertex v = 0; v < 4; ++v) {
        EXPECT_EQ(t.length(v), 2);
        auto p = extract_increasing_geodesic(t, v);
        EXPECT_EQ(p.length(), 2u);
        EXPECT_EQ(p.back(), v);
        EXPECT_EQ(p.directions, (std::vector<Direction>{0, 1}));
    }
    EXPECT_EQ(t.total(), 8);
}

TEST(IncreasingTable, BentPath) {
    // 00 -dir1- 10 -dir0- 11 (bit strings written high bit first)
    auto g = from_pairs(2, {0b00, 0b10, 0b11}, {{0b00, 0b10}, {0b10, 0b11}});
    auto t = increasing_geodesic_table(g, DirectionOrdering::identity(2));
    EXPECT_EQ(t.length(0b00), 2);
    EXPECT_EQ(t.length(0b10), 1);
    EXPECT_EQ(t.length(0b11), 1);
    EXPECT_EQ(t.total(), 4);
}

TEST(IncreasingTable, FullCubesAreTight) {
    for (int d = 0; d <= 6; ++d) {
        auto g = full_cube(d);
        auto t = increasing_geodesic_table(g, DirectionOrdering::identity(d));
        for (int len : t.lengths()) {
            EXPECT_EQ(len, d);
        }
        EXPECT_EQ(t.total(), 2 * static_cast<std::int64_t>(g.size()));
    }
}

TEST(IncreasingTable, IsolatedVertexAndUnknownVertex) {
    auto g = from_pairs(3, {5}, {});
    auto t = increasing_geodesic_table(g, DirectionOrdering::identity(3));
    EXPECT_EQ(t.length(5), 0);
    EXPECT_EQ(extract_increasing_geodesic(t, 5).length(), 0u);
    EXPECT_THROW(extract_increasing_geodesic(t, 4), unknown_vertex);
    EXPECT_THROW(increasing_geodesic_table(g, DirectionOrdering::identity(2)), std::invalid_argument);
}

TEST(IncreasingTable, MatchesBruteForceOracle) {
    Rng ords(99);
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto g = random_instance(seed, 2, 6);
        for (int k = 0; k < 3; ++k) {
            auto ord = DirectionOrdering::random(g.dimension(), ords);
            auto t = increasing_geodesic_table(g, ord);
            auto expect = oracle::longest_increasing_ending_at(g, ranks(ord));
            std::int64_t sum = 0;
            for (Vertex v : g.vertices()) {
                ASSERT_EQ(t.length(v), expect[v]) << "seed " << seed << " vertex " << v;
                auto p = extract_increasing_geodesic(t, v);
                EXPECT_EQ(p.length(), static_cast<std::size_t>(expect[v]));
                EXPECT_EQ(p.back(), v);
                EXPECT_TRUE(is_geodesic(p, g.dimension()));
                EXPECT_TRUE(is_increasing(p, ord));
                EXPECT_TRUE(lies_in(p, g));
                sum += t.length(v);
            }
            EXPECT_GE(sum, 2 * static_cast<std::int64_t>(g.size()));
        }
    }
}

TEST(DirectionOrdering, Validation) {
    EXPECT_THROW(DirectionOrdering::from_permutation({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(DirectionOrdering::from_permutation({0, 3, 1}), std::invalid_argument);
    auto ord = DirectionOrdering::from_permutation({2, 0, 1});
    EXPECT_EQ(ord.rank(2), 0);
    EXPECT_EQ(ord.at(2), 1);
    Rng a(5), b(5);
    EXPECT_EQ(DirectionOrdering::random(8, a), DirectionOrdering::random(8, b));
}

TEST(DirectionOrdering, RandomIsRoughlyUniform) {
    Rng rng(11);
    std::map<std::vector<Direction>, int> seen;
    for (int i = 0; i < 6000; ++i) {
        ++seen[DirectionOrdering::random(3, rng).order()];
    }
    ASSERT_EQ(seen.size(), 6u);
    for (auto& [perm, count] : seen) {
        EXPECT_NEAR(count, 1000, 150);
    }
}

TEST(LongestGeodesic, Examples) {
    for (int d = 1; d <= 6; ++d) {
        auto g = full_cube(d);
        EXPECT_EQ(longest_geodesic_lower_bound(g).length(), static_cast<std::size_t>(d));
        EXPECT_EQ(brute_force_longest_geodesic(g).length(), static_cast<std::size_t>(d));
    }
    auto edge = from_pairs(2, {0, 1}, {{0, 1}});
    EXPECT_EQ(longest_geodesic_lower_bound(edge).length(), 1u);
    // 00 -dir0- 01 -dir1- 11 -dir0- 10
    auto zig = from_pairs(2, {0b00, 0b01, 0b11, 0b10}, {{0b00, 0b01}, {0b01, 0b11}, {0b11, 0b10}});
    EXPECT_EQ(brute_force_longest_geodesic(zig).length(), 2u);
    EXPECT_EQ(brute_force_longest_geodesic(from_pairs(3, {1, 6}, {})).length(), 0u);
    EXPECT_THROW(longest_geodesic_lower_bound(from_pairs(2, {}, {})), empty_graph);
    EXPECT_THROW(greedy_geodesic(from_pairs(2, {}, {})), empty_graph);
}

TEST(LongestGeodesic, BruteForceCapIsConfigurable) {
    auto g = full_cube(9);
    EXPECT_THROW(brute_force_longest_geodesic(g), cap_exceeded);
    SearchCaps caps;
    caps.oracle_max_n = 9;
    EXPECT_EQ(brute_force_longest_geodesic(full_cube(5), caps).length(), 5u);
}

TEST(LongestGeodesic, AgainstOracleAndAverageDegree) {
    for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
        auto g = random_instance(seed, 2, 7);
        auto lb = longest_geodesic_lower_bound(g);
        auto bf = brute_force_longest_geodesic(g);
        auto need = average_degree(g).ceil();
        EXPECT_EQ(static_cast<int>(bf.length()), oracle::longest_geodesic(g));
        EXPECT_TRUE(is_geodesic(bf, g.dimension()) && lies_in(bf, g));
        EXPECT_EQ(bf, bf.canonical());
        EXPECT_GE(static_cast<std::int64_t>(lb.length()), need);
        EXPECT_GE(static_cast<std::int64_t>(bf.length()), need);
        EXPECT_LE(lb.length(), bf.length());
    }
}

TEST(GreedyGeodesic, BaselineBounds) {
    EXPECT_GE(greedy_geodesic(full_cube(2)).length(), 1u);
    for (int d = 1; d <= 8; ++d) {
        auto p = greedy_geodesic(full_cube(d));
        EXPECT_GE(static_cast<int>(p.length()), (d + 1) / 2);
        EXPECT_TRUE(is_geodesic(p, d));
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        InstanceSpec spec;
        spec.n = 8;
        spec.density = 0.5;
        spec.seed = seed;
        auto g = generate(spec);
        auto p = greedy_geodesic(g);
        EXPECT_TRUE(is_geodesic(p, 8) && lies_in(p, g));
        EXPECT_GE(2 * static_cast<std::int64_t>(p.length()), average_degree(g).ceil());
    }
}

TEST(Enumeration, Examples) {
    EXPECT_EQ(enumerate_geodesics_of_length(full_cube(2), 2), 4u);
    EXPECT_EQ(enumerate_geodesics_of_length(from_pairs(1, {0, 1}, {{0, 1}}), 1), 1u);
    EXPECT_EQ(enumerate_geodesics_of_length(full_cube(3), 3), 24u);
    EXPECT_THROW(enumerate_geodesics_of_length(full_cube(2), 0), std::invalid_argument);
    EXPECT_THROW(enumerate_geodesics_of_length(full_cube(10), 2), cap_exceeded);
}

TEST(Enumeration, WitnessesAreCanonicalAndDistinct) {
    std::vector<GeodesicPath> ws;
    auto count = enumerate_geodesics_of_length(full_cube(3), 2, {}, &ws);
    ASSERT_EQ(ws.size(), count);
    std::set<std::vector<Vertex>> distinct;
    for (auto& p : ws) {
        EXPECT_TRUE(is_geodesic(p, 3));
        EXPECT_LE(p.front(), p.back());
        distinct.insert(p.vertices);
    }
    EXPECT_EQ(distinct.size(), count);
    ws.clear();
    enumerate_geodesics_of_length(full_cube(3), 2, {}, &ws, 5);
    EXPECT_EQ(ws.size(), 5u);
}

TEST(Enumeration, OrientedIsTwiceUnorderedAndMatchesOracle) {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto g = random_instance(seed + 500, 2, 6);
        for (int d = 1; d <= g.dimension(); ++d) {
            auto unordered = enumerate_geodesics_of_length(g, d);
            EXPECT_EQ(count_oriented_geodesics(g, d), 2 * unordered);
            EXPECT_EQ(unordered, oracle::geodesics_of_length(g, d));
        }
    }
}

TEST(IncreasingCount, Examples) {
    auto id = DirectionOrdering::identity(2);
    EXPECT_EQ(count_increasing_geodesics(full_cube(2), 2, id), 4u);
    EXPECT_EQ(count_increasing_geodesics(full_cube(2), 1, id), 4u);
    EXPECT_EQ(count_oriented_increasing_geodesics(full_cube(2), 1, id), 8u);
    EXPECT_EQ(count_increasing_geodesics(full_cube(2), 3, id), 0u);
    EXPECT_THROW(count_increasing_geodesics(full_cube(2), 0, id), std::invalid_argument);
}

TEST(IncreasingCount, MatchesOracle) {
    Rng ords(3);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto g = random_instance(seed + 900, 2, 6);
        auto ord = DirectionOrdering::random(g.dimension(), ords);
        for (int d = 1; d <= g.dimension(); ++d) {
            auto oriented = oracle::oriented_increasing_of_length(g, d, ranks(ord));
            EXPECT_EQ(count_oriented_increasing_geodesics(g, d, ord), oriented);
            EXPECT_EQ(count_increasing_geodesics(g, d, ord), d == 1 ? oriented / 2 : oriented);
        }
    }
}

TEST(IncreasingCount, ExpectationIdentityOnSmallCube) {
    // Over all 3! orderings the mean oriented count is exactly 2L/d!.
    auto g = full_cube(3);
    for (int d = 1; d <= 3; ++d) {
        std::vector<Direction> perm{0, 1, 2};
        std::uint64_t sum = 0;
        int orders = 0;
        do {
            sum += count_oriented_increasing_geodesics(g, d, DirectionOrdering::from_permutation(perm));
            ++orders;
        } while (std::next_permutation(perm.begin(), perm.end()));
        const auto L = enumerate_geodesics_of_length(g, d);
        EXPECT_EQ(sum * factorial(d), 2 * L * static_cast<std::uint64_t>(orders)) << "d=" << d;
    }
}

TEST(Counting, FactorialOverflowIsReported) {
    EXPECT_EQ(factorial(0), 1u);
    EXPECT_EQ(factorial(5), 120u);
    EXPECT_THROW(factorial(21), std::overflow_error);
}

TEST(Paths, Helpers) {
    auto p = path_from_vertices({0b00, 0b01, 0b11});
    EXPECT_EQ(p.directions, (std::vector<Direction>{0, 1}));
    EXPECT_TRUE(is_geodesic(p, 2));
    EXPECT_EQ(p.reversed().reversed(), p);
    auto back = path_from_vertices({0b00, 0b01, 0b00});
    EXPECT_TRUE(is_walk(back, 2));
    EXPECT_FALSE(is_geodesic(back, 2));
    EXPECT_THROW(path_from_vertices({0, 3}), invalid_edge);
    GeodesicPath broken{{0, 1}, {1}};
    EXPECT_FALSE(is_walk(broken, 2));
}
