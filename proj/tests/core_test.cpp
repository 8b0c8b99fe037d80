#include <gtest/gtest.h>

#include <vector>

#include "cubegeo/core.hpp"
#include "cubegeo/generate.hpp"
#include "cubegeo/rng.hpp"
#include "support/oracles.hpp"

using namespace cubegeo;

namespace {

CubeSubgraph from_pairs(int n, std::vector<Vertex> vs, std::vector<std::pair<Vertex, Vertex>> pairs) {
    return make_subgraph(n, std::span<const Vertex>(vs), std::span<const std::pair<Vertex, Vertex>>(pairs));
}

} // namespace

TEST(MakeSubgraph, FullSquare) {
    auto g = from_pairs(2, {0, 1, 2, 3}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(g.size(), 4u);
    EXPECT_EQ(g, full_cube(2));
}

TEST(MakeSubgraph, IsolatedVertex) {
    auto g = from_pairs(3, {0}, {});
    EXPECT_EQ(g.order(), 1u);
    EXPECT_EQ(g.size(), 0u);
}

TEST(MakeSubgraph, RejectsNonAdjacentEndpoints) {
    EXPECT_THROW(from_pairs(2, {0, 3}, {{0, 3}}), invalid_edge);
}

TEST(MakeSubgraph, RejectsEndpointOutsideVertexSet) {
    EXPECT_THROW(from_pairs(2, {0}, {{0, 1}}), invalid_edge);
}

TEST(MakeSubgraph, RejectsBadDimensionAndVertices) {
    std::vector<Vertex> vs{0};
    EXPECT_THROW(make_subgraph(25, vs, std::span<const Edge>{}), dimension_error);
    EXPECT_THROW(make_subgraph(-1, vs, std::span<const Edge>{}), dimension_error);
    std::vector<Vertex> big{8};
    EXPECT_THROW(induced_subgraph(3, big), dimension_error);
    std::vector<Edge> bad{{0, 2}};
    std::vector<Vertex> two{0, 1};
    EXPECT_THROW(make_subgraph(2, two, bad), invalid_edge);
    std::vector<Edge> high_lo{{1, 0}};
    EXPECT_THROW(make_subgraph(2, two, high_lo), invalid_edge);
}

TEST(MakeSubgraph, DuplicatesCollapse) {
    auto g = from_pairs(2, {1, 0, 1}, {{0, 1}, {1, 0}});
    EXPECT_EQ(g.vertices(), (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(g.size(), 1u);
}

TEST(InducedSubgraph, Examples) {
    std::vector<Vertex> square{0, 1, 2, 3};
    EXPECT_EQ(induced_subgraph(2, square).size(), 4u);
    std::vector<Vertex> even{0b000, 0b011, 0b101, 0b110};
    EXPECT_EQ(induced_subgraph(3, even).size(), 0u);
    std::vector<Vertex> face{0b000, 0b001, 0b010, 0b011};
    EXPECT_EQ(induced_subgraph(3, face).size(), 4u);
}

TEST(AverageDegree, Examples) {
    EXPECT_EQ(average_degree(full_cube(3)), Rational(3));
    EXPECT_EQ(average_degree(from_pairs(1, {0, 1}, {{0, 1}})), Rational(1));
    auto path = from_pairs(2, {0, 1, 3}, {{0, 1}, {1, 3}});
    EXPECT_EQ(average_degree(path), Rational(4, 3));
    EXPECT_EQ(average_degree(path).to_string(), "4/3");
    EXPECT_THROW(average_degree(from_pairs(2, {}, {})), empty_graph);
}

TEST(RationalArithmetic, FloorCeilOrdering) {
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(7, 2).ceil(), 4);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_LT(Rational(2, 3), Rational(3, 4));
    EXPECT_TRUE(Rational(8, 4).is_integer());
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Hamming, DistanceExamples) {
    EXPECT_EQ(hamming_distance(0b0000, 0b1111), 4);
    EXPECT_EQ(hamming_distance(0b1011, 0b1011), 0);
    EXPECT_EQ(hamming_distance(0b101, 0b100), 1);
}

TEST(Hamming, AntipodeExamples) {
    EXPECT_EQ(antipode(0b010, 3), 0b101u);
    EXPECT_EQ(antipode(0, 1), 1u);
    EXPECT_EQ(antipode(0b1111, 4), 0u);
}

TEST(Hamming, MaxPairExamples) {
    for (int d = 1; d <= 6; ++d) {
        EXPECT_EQ(max_hamming_pair(full_cube(d)).distance, d);
    }
    EXPECT_EQ(max_hamming_pair(from_pairs(3, {5}, {})).distance, 0);
    // {∅, {1}, {2}} with element j stored at bit j - 1
    auto p = max_hamming_pair(from_pairs(3, {0b000, 0b001, 0b010}, {}));
    EXPECT_EQ(p.distance, 2);
    EXPECT_EQ(p.x, 0b001u);
    EXPECT_EQ(p.y, 0b010u);
    EXPECT_THROW(max_hamming_pair(from_pairs(3, {}, {})), empty_graph);
}

TEST(Hamming, MaxPairMatchesAllPairsOracle) {
    // densities high enough to take the BFS branch as well
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        InstanceSpec spec;
        spec.n = 3 + static_cast<int>(seed % 8);
        spec.density = (seed % 3 == 0) ? 0.9 : 0.3;
        spec.seed = seed;
        auto g = generate(spec);
        auto p = max_hamming_pair(g);
        EXPECT_EQ(p.distance, oracle::max_hamming(g)) << "seed " << seed;
        EXPECT_EQ(hamming_distance(p.x, p.y), p.distance);
        EXPECT_TRUE(g.contains(p.x) && g.contains(p.y));
    }
}

TEST(EdgeBetween, AdjacentOnly) {
    EXPECT_EQ(edge_between(0b110, 0b100), (Edge{0b100, 1}));
    EXPECT_THROW(edge_between(0, 3), invalid_edge);
    EXPECT_THROW(edge_between(2, 2), invalid_edge);
}

TEST(Degrees, SumIsTwiceEdges) {
    auto g = full_cube(4);
    auto deg = g.degrees();
    for (int x : deg) {
        EXPECT_EQ(x, 4);
    }
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
    Rng a = Rng::stream(7, 3), b = Rng::stream(7, 3), c = Rng::stream(7, 4);
    auto x = a(), y = b(), z = c();
    EXPECT_EQ(x, y);
    EXPECT_NE(x, z);
    Rng r(1);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_LT(r.below(7), 7u);
        double u = r.unit();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(Rng, KnownSplitMixOutput) {
    // first outputs of SplitMix64 seeded with 0
    Rng r(0);
    EXPECT_EQ(r(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(r(), 0x6e789e6aa1b965f4ULL);
}
