#pragma once

// Geodesics in subgraphs of Q_n.
//
// The central routine is the increasing-geodesic table: for a direction
// ordering, L(v) is the length of the longest geodesic ending at v whose edge
// directions increase along the path. It is computed by sweeping direction
// classes in order. Two edges of the same direction never share a vertex, so a
// whole class can be relaxed at once from the values before the class.

#include <algorithm>
#include <climits>
#include <numeric>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubegeo/core.hpp"
#include "cubegeo/rng.hpp"

namespace cubegeo {

class unknown_vertex : public error {
public:
    using error::error;
};

// A path in Q_n given by its vertex sequence and the direction of each step.
// A single vertex is the empty geodesic.
struct GeodesicPath {
    std::vector<Vertex> vertices;
    std::vector<Direction> directions;

    std::size_t length() const { return directions.size(); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }

    GeodesicPath reversed() const {
        return {{vertices.rbegin(), vertices.rend()}, {directions.rbegin(), directions.rend()}};
    }

    // A path and its reversal are the same geodesic; the canonical
    // orientation starts at the numerically smaller endpoint.
    GeodesicPath canonical() const {
        return (vertices.empty() || front() <= back()) ? *this : reversed();
    }

    friend bool operator==(const GeodesicPath&, const GeodesicPath&) = default;
};

inline GeodesicPath path_from_vertices(std::vector<Vertex> vertices) {
    GeodesicPath p;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        p.directions.push_back(edge_between(vertices[i - 1], vertices[i]).dir);
    }
    p.vertices = std::move(vertices);
    return p;
}

// Valid walk in Q_n: consecutive vertices differ in exactly the stated
// direction. Does not require distinct directions.
inline bool is_walk(const GeodesicPath& p, int n) {
    if (p.vertices.empty() || p.vertices.size() != p.directions.size() + 1) {
        return false;
    }
    for (Vertex v : p.vertices) {
        if (v > full_mask(n)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < p.directions.size(); ++i) {
        Direction d = p.directions[i];
        if (d < 0 || d >= n || (p.vertices[i] ^ p.vertices[i + 1]) != bit(d)) {
            return false;
        }
    }
    return true;
}

inline bool is_geodesic(const GeodesicPath& p, int n) {
    if (!is_walk(p, n)) {
        return false;
    }
    Vertex used = 0;
    for (Direction d : p.directions) {
        if (used & bit(d)) {
            return false;
        }
        used |= bit(d);
    }
    return true;
}

inline bool lies_in(const GeodesicPath& p, const CubeSubgraph& g) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (!g.contains(p.vertices[i])) {
            return false;
        }
        if (i > 0 && !g.contains(Edge{std::min(p.vertices[i - 1], p.vertices[i]), p.directions[i - 1]})) {
            return false;
        }
    }
    return true;
}

// A permutation of the directions [0, n). rank(d) is the position of d.
class DirectionOrdering {
public:
    DirectionOrdering() = default;

    static DirectionOrdering identity(int n) {
        std::vector<Direction> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        return DirectionOrdering(std::move(perm));
    }

    static DirectionOrdering random(int n, Rng& rng) {
        auto ord = identity(n);
        rng.shuffle(std::span<Direction>(ord.order_));
        ord.rebuild_ranks();
        return ord;
    }

    static DirectionOrdering from_permutation(std::vector<Direction> perm) {
        std::vector<bool> seen(perm.size(), false);
        for (Direction d : perm) {
            if (d < 0 || static_cast<std::size_t>(d) >= perm.size() || seen[d]) {
                throw std::invalid_argument("direction ordering is not a permutation");
            }
            seen[d] = true;
        }
        return DirectionOrdering(std::move(perm));
    }

    int size() const { return static_cast<int>(order_.size()); }
    Direction at(int position) const { return order_[position]; }
    int rank(Direction d) const { return rank_[d]; }
    const std::vector<Direction>& order() const { return order_; }

    friend bool operator==(const DirectionOrdering&, const DirectionOrdering&) = default;

private:
    explicit DirectionOrdering(std::vector<Direction> perm) : order_(std::move(perm)) { rebuild_ranks(); }

    void rebuild_ranks() {
        rank_.assign(order_.size(), 0);
        for (std::size_t i = 0; i < order_.size(); ++i) {
            rank_[order_[i]] = static_cast<int>(i);
        }
    }

    std::vector<Direction> order_;
    std::vector<int> rank_;
};

inline bool is_increasing(const GeodesicPath& p, const DirectionOrdering& ord) {
    for (std::size_t i = 1; i < p.directions.size(); ++i) {
        if (ord.rank(p.directions[i - 1]) >= ord.rank(p.directions[i])) {
            return false;
        }
    }
    return true;
}

struct Step {
    Vertex from = 0;
    Direction dir = 0;
    friend bool operator==(const Step&, const Step&) = default;
};

// Longest increasing geodesic lengths L(v) for every vertex of a subgraph,
// with enough predecessor history to rebuild a witness for each vertex.
class LTable {
public:
    int dimension() const { return n_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const DirectionOrdering& ordering() const { return ordering_; }

    // Aligned with vertices().
    const std::vector<int>& lengths() const { return lengths_; }

    int length(Vertex v) const { return lengths_[checked_index(v)]; }

    // The step that last set L(v), if any.
    std::optional<Step> pred(Vertex v) const {
        const auto& h = history_[checked_index(v)];
        if (h.empty()) {
            return std::nullopt;
        }
        return Step{h.back().from, h.back().dir};
    }

    // S(G), the sum of L(v).
    std::int64_t total() const {
        std::int64_t s = 0;
        for (int l : lengths_) {
            s += l;
        }
        return s;
    }

private:
    struct Update {
        int rank;
        int length;
        Vertex from;
        Direction dir;
    };

    std::size_t checked_index(Vertex v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v) {
            throw unknown_vertex("vertex " + std::to_string(v) + " is not in the table");
        }
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    int n_ = 0;
    std::vector<Vertex> vertices_;
    DirectionOrdering ordering_;
    std::vector<int> lengths_;
    std::vector<std::vector<Update>> history_;

    friend LTable increasing_geodesic_table(const CubeSubgraph&, const DirectionOrdering&);
    friend GeodesicPath extract_increasing_geodesic(const LTable&, Vertex);
};

inline LTable increasing_geodesic_table(const CubeSubgraph& g, const DirectionOrdering& ord) {
    const int n = g.dimension();
    if (ord.size() != n) {
        throw std::invalid_argument("ordering has " + std::to_string(ord.size()) + " directions, graph has " +
                                    std::to_string(n));
    }
    LTable t;
    t.n_ = n;
    t.vertices_ = g.vertices();
    t.ordering_ = ord;
    t.lengths_.assign(g.order(), 0);
    t.history_.assign(g.order(), {});

    std::vector<std::vector<Edge>> classes(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        classes[ord.rank(e.dir)].push_back(e);
    }

    auto relax = [&](std::size_t i, int rank, int candidate, Vertex from, Direction dir) {
        int& cur = t.lengths_[i];
        auto& h = t.history_[i];
        if (candidate > cur || (candidate == cur && !h.empty() && from < h.back().from)) {
            cur = candidate;
            h.push_back({rank, candidate, from, dir});
        }
    };

    for (int rank = 0; rank < n; ++rank) {
        for (const auto& e : classes[rank]) {
            const std::size_t ix = g.index_of(e.lo);
            const std::size_t iy = g.index_of(e.hi());
            const int lx = t.lengths_[ix];
            const int ly = t.lengths_[iy];
            relax(iy, rank, lx + 1, e.lo, e.dir);
            relax(ix, rank, ly + 1, e.hi(), e.dir);
        }
    }
    return t;
}

inline GeodesicPath extract_increasing_geodesic(const LTable& t, Vertex v) {
    std::size_t i = t.checked_index(v);
    int need = t.lengths_[i];
    int bound = INT_MAX;

    std::vector<Vertex> rev_vertices{v};
    std::vector<Direction> rev_dirs;
    while (need > 0) {
        const auto& h = t.history_[i];
        auto it = std::find_if(h.rbegin(), h.rend(), [&](const LTable::Update& u) { return u.rank < bound; });
        if (it == h.rend() || it->length != need) {
            throw std::logic_error("inconsistent increasing-geodesic table");
        }
        rev_vertices.push_back(it->from);
        rev_dirs.push_back(it->dir);
        bound = it->rank;
        --need;
        i = t.checked_index(it->from);
    }
    return {{rev_vertices.rbegin(), rev_vertices.rend()}, {rev_dirs.rbegin(), rev_dirs.rend()}};
}

// Witness of Theorem-2 type: the longest table entry, smallest vertex on ties.
// Its length is at least the ceiling of the average degree.
inline GeodesicPath longest_geodesic_lower_bound(const CubeSubgraph& g, const DirectionOrdering& ord) {
    if (g.empty()) {
        throw empty_graph("longest geodesic of an empty graph");
    }
    auto t = increasing_geodesic_table(g, ord);
    const auto& len = t.lengths();
    auto best = static_cast<std::size_t>(std::max_element(len.begin(), len.end()) - len.begin());
    return extract_increasing_geodesic(t, t.vertices()[best]);
}

inline GeodesicPath longest_geodesic_lower_bound(const CubeSubgraph& g) {
    return longest_geodesic_lower_bound(g, DirectionOrdering::identity(g.dimension()));
}

// Baseline: peel to the core where every degree is at least d/2, then walk
// from the smallest core vertex, always taking the smallest unused direction.
inline GeodesicPath greedy_geodesic(const CubeSubgraph& g) {
    if (g.empty()) {
        throw empty_graph("greedy geodesic of an empty graph");
    }
    const auto m = static_cast<std::int64_t>(g.size());
    const auto order = static_cast<std::int64_t>(g.order());
    auto deg = g.degrees();
    std::vector<bool> alive(g.order(), true);

    // deg < d/2  <=>  deg * |V| < |E|
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (deg[i] * order < m) {
            alive[i] = false;
            queue.push_back(i);
        }
    }
    const int n = g.dimension();
    auto neighbour = [&](std::size_t i, Direction d) -> std::size_t {
        Vertex v = g.vertices()[i];
        Vertex w = v ^ bit(d);
        std::size_t j = g.index_of(w);
        if (j == g.order() || !g.contains(Edge{std::min(v, w), d})) {
            return g.order();
        }
        return j;
    };
    while (!queue.empty()) {
        std::size_t i = queue.back();
        queue.pop_back();
        for (Direction d = 0; d < n; ++d) {
            std::size_t j = neighbour(i, d);
            if (j != g.order() && alive[j]) {
                --deg[j];
                if (deg[j] * order < m) {
                    alive[j] = false;
                    queue.push_back(j);
                }
            }
        }
    }

    auto start = static_cast<std::size_t>(std::find(alive.begin(), alive.end(), true) - alive.begin());
    if (start == g.order()) {
        start = 0; // only when there are no edges
    }
    GeodesicPath p{{g.vertices()[start]}, {}};
    Vertex used = 0;
    std::size_t cur = start;
    for (bool moved = true; moved;) {
        moved = false;
        for (Direction d = 0; d < n; ++d) {
            if (used & bit(d)) {
                continue;
            }
            std::size_t j = neighbour(cur, d);
            if (j != g.order() && alive[j]) {
                used |= bit(d);
                cur = j;
                p.vertices.push_back(g.vertices()[j]);
                p.directions.push_back(d);
                moved = true;
                break;
            }
        }
    }
    return p;
}

namespace detail {

// Adjacency by vertex index, neighbours sorted by direction.
inline std::vector<std::vector<std::pair<std::size_t, Direction>>> adjacency(const CubeSubgraph& g) {
    std::vector<std::vector<std::pair<std::size_t, Direction>>> adj(g.order());
    for (const auto& e : g.edges()) {
        std::size_t a = g.index_of(e.lo);
        std::size_t b = g.index_of(e.hi());
        adj[a].push_back({b, e.dir});
        adj[b].push_back({a, e.dir});
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    }
    return adj;
}

inline void check_oracle_cap(const CubeSubgraph& g, const SearchCaps& caps, const char* what) {
    if (g.dimension() > caps.oracle_max_n && g.size() > caps.oracle_max_edges) {
        throw cap_exceeded(std::string(what) + ": n = " + std::to_string(g.dimension()) + " and |E| = " +
                           std::to_string(g.size()) + " exceed the oracle cap");
    }
}

// Depth-first walk over all geodesics starting at each vertex; `visit` sees
// the current vertex-index stack and direction stack after every extension.
template <class Visit>
void for_each_geodesic(const CubeSubgraph& g, std::size_t max_length, Visit&& visit) {
    auto adj = adjacency(g);
    std::vector<std::size_t> stack;
    std::vector<Direction> dirs;
    auto dfs = [&](auto& self, std::size_t u, Vertex used) -> void {
        visit(stack, dirs);
        if (dirs.size() == max_length) {
            return;
        }
        for (auto [w, d] : adj[u]) {
            if (used & bit(d)) {
                continue;
            }
            stack.push_back(w);
            dirs.push_back(d);
            self(self, w, used | bit(d));
            stack.pop_back();
            dirs.pop_back();
        }
    };
    for (std::size_t s = 0; s < g.order(); ++s) {
        stack.assign(1, s);
        dirs.clear();
        dfs(dfs, s, 0);
    }
}

} // namespace detail

// Exact longest geodesic by exhaustive search. Returned in canonical form.
inline GeodesicPath brute_force_longest_geodesic(const CubeSubgraph& g, const SearchCaps& caps = {}) {
    detail::check_oracle_cap(g, caps, "brute_force_longest_geodesic");
    if (g.empty()) {
        return {};
    }
    GeodesicPath best{{g.vertices().front()}, {}};
    detail::for_each_geodesic(g, static_cast<std::size_t>(g.dimension()),
                              [&](const std::vector<std::size_t>& stack, const std::vector<Direction>& dirs) {
                                  if (dirs.size() > best.length()) {
                                      best.vertices.clear();
                                      for (auto i : stack) {
                                          best.vertices.push_back(g.vertices()[i]);
                                      }
                                      best.directions = dirs;
                                  }
                              });
    return best.canonical();
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("geodesic count overflows 64 bits");
    }
    return r;
}

inline std::uint64_t factorial(int d) {
    std::uint64_t f = 1;
    for (int i = 2; i <= d; ++i) {
        if (__builtin_mul_overflow(f, static_cast<std::uint64_t>(i), &f)) {
            throw std::overflow_error("factorial overflows 64 bits");
        }
    }
    return f;
}

// Orientation-sensitive count: every geodesic with d >= 1 edges is seen twice.
inline std::uint64_t count_oriented_geodesics(const CubeSubgraph& g, int d, const SearchCaps& caps = {}) {
    if (d < 1) {
        throw std::invalid_argument("geodesic length must be at least 1");
    }
    detail::check_oracle_cap(g, caps, "count_oriented_geodesics");
    std::uint64_t count = 0;
    detail::for_each_geodesic(g, static_cast<std::size_t>(d),
                              [&](const std::vector<std::size_t>&, const std::vector<Direction>& dirs) {
                                  count += dirs.size() == static_cast<std::size_t>(d);
                              });
    return count;
}

// Number of geodesics with exactly d edges, each counted once (a path and its
// reversal are one geodesic). Up to `witness_limit` canonical witnesses are
// appended to `witnesses` when it is non-null.
inline std::uint64_t enumerate_geodesics_of_length(const CubeSubgraph& g, int d, const SearchCaps& caps = {},
                                                   std::vector<GeodesicPath>* witnesses = nullptr,
                                                   std::size_t witness_limit = SIZE_MAX) {
    if (d < 1) {
        throw std::invalid_argument("geodesic length must be at least 1");
    }
    detail::check_oracle_cap(g, caps, "enumerate_geodesics_of_length");
    std::uint64_t count = 0;
    detail::for_each_geodesic(
        g, static_cast<std::size_t>(d), [&](const std::vector<std::size_t>& stack, const std::vector<Direction>& dirs) {
            if (dirs.size() != static_cast<std::size_t>(d) || stack.front() > stack.back()) {
                return;
            }
            ++count;
            if (witnesses && witnesses->size() < witness_limit) {
                GeodesicPath p;
                for (auto i : stack) {
                    p.vertices.push_back(g.vertices()[i]);
                }
                p.directions = dirs;
                witnesses->push_back(std::move(p));
            }
        });
    return count;
}

// Oriented ord-increasing geodesics with exactly d edges. For d >= 2 at most
// one orientation of a path is increasing, so this equals the unordered count;
// a single edge is increasing both ways and contributes 2.
inline std::uint64_t count_oriented_increasing_geodesics(const CubeSubgraph& g, int d, const DirectionOrdering& ord) {
    if (d < 1) {
        throw std::invalid_argument("geodesic length must be at least 1");
    }
    const int n = g.dimension();
    if (d > n) {
        return 0;
    }
    const std::size_t depth = static_cast<std::size_t>(d) + 1;
    // counts[v * depth + k]: increasing geodesics with k edges ending at v
    std::vector<std::uint64_t> counts(g.order() * depth, 0);
    for (std::size_t i = 0; i < g.order(); ++i) {
        counts[i * depth] = 1;
    }
    std::vector<std::vector<Edge>> classes(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        classes[ord.rank(e.dir)].push_back(e);
    }
    std::vector<std::uint64_t> into_x(depth), into_y(depth);
    for (const auto& cls : classes) {
        for (const auto& e : cls) {
            const std::size_t ix = g.index_of(e.lo) * depth;
            const std::size_t iy = g.index_of(e.hi()) * depth;
            for (std::size_t k = 1; k < depth; ++k) {
                into_y[k] = counts[ix + k - 1];
                into_x[k] = counts[iy + k - 1];
            }
            for (std::size_t k = 1; k < depth; ++k) {
                counts[iy + k] = checked_add(counts[iy + k], into_y[k]);
                counts[ix + k] = checked_add(counts[ix + k], into_x[k]);
            }
        }
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
        total = checked_add(total, counts[i * depth + static_cast<std::size_t>(d)]);
    }
    return total;
}

// Unordered count: each path once, so d = 1 gives |E|.
inline std::uint64_t count_increasing_geodesics(const CubeSubgraph& g, int d, const DirectionOrdering& ord) {
    const std::uint64_t oriented = count_oriented_increasing_geodesics(g, d, ord);
    return d == 1 ? oriented / 2 : oriented;
}

// Mean of the oriented increasing count over `samples` uniformly random
// orderings. Its expectation is 2L/d! for every d >= 1, L the unordered
// number of geodesics of length d.
inline double mean_increasing_count(const CubeSubgraph& g, int d, std::uint64_t samples, Rng& rng) {
    long double sum = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        auto ord = DirectionOrdering::random(g.dimension(), rng);
        sum += static_cast<long double>(count_oriented_increasing_geodesics(g, d, ord));
    }
    return samples == 0 ? 0.0 : static_cast<double>(sum / static_cast<long double>(samples));
}

} // namespace cubegeo
