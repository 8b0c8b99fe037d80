#pragma once

// Vertices, directions, edges and subgraphs of the hypercube Q_n.
//
// A vertex is a bitmask; bit i is coordinate i. Directions are 0-based
// everywhere, including every serialized format.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace cubegeo {

using Vertex = std::uint32_t;
using Direction = int;

inline constexpr int max_dimension = 24;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_error : public error {
public:
    using error::error;
};

class invalid_edge : public error {
public:
    using error::error;
};

class empty_graph : public error {
public:
    using error::error;
};

class cap_exceeded : public error {
public:
    using error::error;
};

class precondition_error : public error {
public:
    using error::error;
};

// Size limits for the exponential searches. These are configuration with
// desk-scale defaults, not hard limits of the algorithms.
struct SearchCaps {
    int oracle_max_n = 8;
    std::size_t oracle_max_edges = 200;
    int subset_dp_max_n = 12;
};

inline constexpr Vertex bit(Direction dir) { return Vertex{1} << dir; }

inline constexpr Vertex full_mask(int n) { return n == 0 ? 0 : (Vertex{1} << n) - 1; }

inline int hamming_distance(Vertex x, Vertex y) { return std::popcount(x ^ y); }

inline constexpr Vertex antipode(Vertex x, int n) { return x ^ full_mask(n); }

inline void check_dimension(int n) {
    if (n < 0 || n > max_dimension) {
        throw dimension_error("dimension " + std::to_string(n) + " outside [0, " +
                              std::to_string(max_dimension) + "]");
    }
}

// Exact rational in lowest terms with a positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num(value) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        auto g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    std::int64_t floor() const {
        auto q = num / den;
        return (num % den != 0 && num < 0) ? q - 1 : q;
    }
    std::int64_t ceil() const {
        auto q = num / den;
        return (num % den != 0 && num > 0) ? q + 1 : q;
    }
    bool is_integer() const { return den == 1; }

    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num) * b.den;
        __int128 rhs = static_cast<__int128>(b.num) * a.den;
        return lhs <=> rhs;
    }
};

// An edge of Q_n, identified by its endpoint with bit `dir` clear.
struct Edge {
    Vertex lo = 0;
    Direction dir = 0;

    Vertex hi() const { return lo | bit(dir); }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge edge_between(Vertex x, Vertex y) {
    Vertex diff = x ^ y;
    if (std::popcount(diff) != 1) {
        throw invalid_edge("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                           " differ in " + std::to_string(std::popcount(diff)) + " bits");
    }
    return Edge{std::min(x, y), std::countr_zero(diff)};
}

// A subgraph of Q_n. Vertex and edge lists are sorted and duplicate free, so
// structural equality is value equality.
class CubeSubgraph {
public:
    CubeSubgraph() = default;

    int dimension() const { return n_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t order() const { return vertices_.size(); }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    bool contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

    bool contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    // Position of v in vertices(), or order() if absent.
    std::size_t index_of(Vertex v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        return (it != vertices_.end() && *it == v) ? static_cast<std::size_t>(it - vertices_.begin())
                                                    : vertices_.size();
    }

    // Degree of every vertex, aligned with vertices().
    std::vector<int> degrees() const {
        std::vector<int> deg(vertices_.size(), 0);
        for (const auto& e : edges_) {
            ++deg[index_of(e.lo)];
            ++deg[index_of(e.hi())];
        }
        return deg;
    }

    friend bool operator==(const CubeSubgraph&, const CubeSubgraph&) = default;

    friend CubeSubgraph make_subgraph(int n, std::span<const Vertex> vertices, std::span<const Edge> edges);
    friend CubeSubgraph induced_subgraph(int n, std::span<const Vertex> vertices);

private:
    int n_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

inline std::vector<Vertex> canonical_vertices(int n, std::span<const Vertex> vertices) {
    check_dimension(n);
    std::vector<Vertex> out(vertices.begin(), vertices.end());
    for (Vertex v : out) {
        if (v > full_mask(n)) {
            throw dimension_error("vertex " + std::to_string(v) + " does not fit in dimension " +
                                  std::to_string(n));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline CubeSubgraph make_subgraph(int n, std::span<const Vertex> vertices, std::span<const Edge> edges) {
    CubeSubgraph g;
    g.n_ = n;
    g.vertices_ = canonical_vertices(n, vertices);
    g.edges_.assign(edges.begin(), edges.end());
    for (const auto& e : g.edges_) {
        if (e.dir < 0 || e.dir >= n) {
            throw invalid_edge("edge direction " + std::to_string(e.dir) + " outside [0, " +
                               std::to_string(n) + ")");
        }
        if (e.lo & bit(e.dir)) {
            throw invalid_edge("edge (" + std::to_string(e.lo) + ", " + std::to_string(e.dir) +
                               ") has bit dir set on its low endpoint");
        }
        if (!g.contains(e.lo) || !g.contains(e.hi())) {
            throw invalid_edge("edge (" + std::to_string(e.lo) + ", " + std::to_string(e.dir) +
                               ") has an endpoint outside the vertex set");
        }
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    return g;
}

// Convenience overload taking explicit endpoint pairs.
inline CubeSubgraph make_subgraph(int n, std::span<const Vertex> vertices,
                                  std::span<const std::pair<Vertex, Vertex>> endpoint_pairs) {
    std::vector<Edge> edges;
    edges.reserve(endpoint_pairs.size());
    for (auto [x, y] : endpoint_pairs) {
        edges.push_back(edge_between(x, y));
    }
    return make_subgraph(n, vertices, edges);
}

inline CubeSubgraph induced_subgraph(int n, std::span<const Vertex> vertices) {
    CubeSubgraph g;
    g.n_ = n;
    g.vertices_ = canonical_vertices(n, vertices);
    for (Vertex v : g.vertices_) {
        for (Direction d = 0; d < n; ++d) {
            if (!(v & bit(d)) && g.contains(v | bit(d))) {
                g.edges_.push_back(Edge{v, d});
            }
        }
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

inline CubeSubgraph full_cube(int n) {
    check_dimension(n);
    std::vector<Vertex> all(std::size_t{1} << n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return induced_subgraph(n, all);
}

inline Rational average_degree(const CubeSubgraph& g) {
    if (g.empty()) {
        throw empty_graph("average degree of an empty vertex set");
    }
    return Rational(2 * static_cast<std::int64_t>(g.size()), static_cast<std::int64_t>(g.order()));
}

struct HammingPair {
    Vertex x = 0;
    Vertex y = 0;
    int distance = 0;
};

// Lexicographically first pair realising the maximum pairwise distance.
// Dense sets use a multi-source BFS over Q_n: the eccentricity of x within V
// is n minus the distance from antipode(x) to V.
inline HammingPair max_hamming_pair(const CubeSubgraph& g) {
    if (g.empty()) {
        throw empty_graph("max Hamming pair of an empty vertex set");
    }
    const auto& vs = g.vertices();
    const int n = g.dimension();
    const double pairs = 0.5 * static_cast<double>(vs.size()) * static_cast<double>(vs.size());
    const double sweep = static_cast<double>(std::size_t{1} << n) * (n + 1);

    int best = 0;
    if (pairs <= sweep) {
        for (std::size_t i = 0; i < vs.size() && best < n; ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                best = std::max(best, hamming_distance(vs[i], vs[j]));
            }
        }
    } else {
        std::vector<std::int8_t> dist(std::size_t{1} << n, -1);
        std::vector<Vertex> frontier(vs.begin(), vs.end());
        for (Vertex v : vs) {
            dist[v] = 0;
        }
        for (std::int8_t level = 1; !frontier.empty(); ++level) {
            std::vector<Vertex> next;
            for (Vertex u : frontier) {
                for (Direction d = 0; d < n; ++d) {
                    Vertex w = u ^ bit(d);
                    if (dist[w] < 0) {
                        dist[w] = level;
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
        }
        for (Vertex v : vs) {
            best = std::max(best, n - dist[antipode(v, n)]);
        }
    }

    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (hamming_distance(vs[i], vs[j]) == best) {
                return {vs[i], vs[j], best};
            }
        }
    }
    return {vs.front(), vs.front(), 0};
}

} // namespace cubegeo
