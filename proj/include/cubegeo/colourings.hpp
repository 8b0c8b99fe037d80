#pragma once

// Two-colourings of E(Q_n) and the antipodal-path searches around them.
//
// Edge ids are dense: id = dir * 2^(n-1) + (lo with bit dir squeezed out).

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cubegeo/core.hpp"
#include "cubegeo/geodesics.hpp"
#include "cubegeo/rng.hpp"

namespace cubegeo {

class search_failed : public error {
public:
    using error::error;
};

enum class Colour : std::uint8_t { Red = 0, Blue = 1 };

inline constexpr Colour opposite(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }

inline constexpr const char* to_string(Colour c) { return c == Colour::Red ? "red" : "blue"; }

inline std::size_t cube_edge_count(int n) { return n == 0 ? 0 : static_cast<std::size_t>(n) << (n - 1); }

inline std::size_t edge_id(const Edge& e, int n) {
    const Vertex low = e.lo & (bit(e.dir) - 1);
    const Vertex high = (e.lo >> (e.dir + 1)) << e.dir;
    return (static_cast<std::size_t>(e.dir) << (n - 1)) | (low | high);
}

inline Edge edge_at(std::size_t id, int n) {
    const auto dir = static_cast<Direction>(id >> (n - 1));
    const auto rest = static_cast<Vertex>(id & ((std::size_t{1} << (n - 1)) - 1));
    const Vertex low = rest & (bit(dir) - 1);
    const Vertex high = (rest >> dir) << (dir + 1);
    return Edge{low | high, dir};
}

inline Edge antipodal_edge(const Edge& e, int n) { return Edge{antipode(e.lo, n) ^ bit(e.dir), e.dir}; }

// A total colouring of E(Q_n).
class EdgeColouring {
public:
    EdgeColouring() = default;
    explicit EdgeColouring(int n, Colour fill = Colour::Red) : n_(n) {
        check_dimension(n);
        if (n < 1) {
            throw dimension_error("colourings need n >= 1");
        }
        colours_.assign(cube_edge_count(n), fill);
    }

    int dimension() const { return n_; }
    std::size_t edge_count() const { return colours_.size(); }

    Colour operator[](const Edge& e) const { return colours_[edge_id(e, n_)]; }
    Colour operator[](std::size_t id) const { return colours_[id]; }
    Colour between(Vertex x, Vertex y) const { return (*this)[edge_between(x, y)]; }
    // Colour of the edge leaving v in direction d.
    Colour at(Vertex v, Direction d) const { return (*this)[Edge{v & ~bit(d), d}]; }

    void set(const Edge& e, Colour c) { colours_[edge_id(e, n_)] = c; }
    void set(std::size_t id, Colour c) { colours_[id] = c; }

    friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

private:
    int n_ = 0;
    std::vector<Colour> colours_;
};

inline bool is_antipodal(const EdgeColouring& c) {
    const int n = c.dimension();
    for (std::size_t id = 0; id < c.edge_count(); ++id) {
        if (c[id] == c[antipodal_edge(edge_at(id, n), n)]) {
            return false;
        }
    }
    return true;
}

// One id per antipodal edge pair (the smaller id), ascending.
inline std::vector<std::size_t> antipodal_pair_representatives(int n) {
    std::vector<std::size_t> reps;
    for (std::size_t id = 0; id < cube_edge_count(n); ++id) {
        if (id < edge_id(antipodal_edge(edge_at(id, n), n), n)) {
            reps.push_back(id);
        }
    }
    return reps;
}

inline EdgeColouring uniform_colouring(int n, Colour c) { return EdgeColouring(n, c); }

// Directions 0..n-2 red, direction n-1 blue.
inline EdgeColouring direction_split_colouring(int n) {
    EdgeColouring c(n, Colour::Red);
    for (std::size_t id = 0; id < c.edge_count(); ++id) {
        if (edge_at(id, n).dir == n - 1) {
            c.set(id, Colour::Blue);
        }
    }
    return c;
}

// Bit j of `index` colours edge id j (1 = blue).
inline EdgeColouring colouring_from_index(int n, std::uint64_t index) {
    EdgeColouring c(n);
    if (c.edge_count() > 64) {
        throw cap_exceeded("colouring index needs more than 64 edges");
    }
    for (std::size_t id = 0; id < c.edge_count(); ++id) {
        c.set(id, ((index >> id) & 1) ? Colour::Blue : Colour::Red);
    }
    return c;
}

// Bit j of `index` colours the j-th antipodal pair representative; its
// partner gets the opposite colour.
inline EdgeColouring antipodal_colouring_from_index(int n, std::uint64_t index) {
    if (n < 2) {
        throw dimension_error("antipodal colourings need n >= 2");
    }
    EdgeColouring c(n);
    auto reps = antipodal_pair_representatives(n);
    if (reps.size() > 64) {
        throw cap_exceeded("antipodal colouring index needs more than 64 pairs");
    }
    for (std::size_t j = 0; j < reps.size(); ++j) {
        Colour col = ((index >> j) & 1) ? Colour::Blue : Colour::Red;
        c.set(reps[j], col);
        c.set(antipodal_edge(edge_at(reps[j], n), n), opposite(col));
    }
    return c;
}

inline EdgeColouring random_colouring(int n, Rng& rng) {
    EdgeColouring c(n);
    for (std::size_t id = 0; id < c.edge_count(); ++id) {
        c.set(id, (rng() >> 63) ? Colour::Blue : Colour::Red);
    }
    return c;
}

inline EdgeColouring random_antipodal_colouring(int n, Rng& rng) {
    if (n < 2) {
        throw dimension_error("antipodal colourings need n >= 2");
    }
    EdgeColouring c(n);
    for (std::size_t id : antipodal_pair_representatives(n)) {
        Colour col = (rng() >> 63) ? Colour::Blue : Colour::Red;
        c.set(id, col);
        c.set(antipodal_edge(edge_at(id, n), n), opposite(col));
    }
    return c;
}

inline EdgeColouring random_antipodal_colouring(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_antipodal_colouring(n, rng);
}

inline int count_colour_changes(const EdgeColouring& c, const GeodesicPath& p) {
    int changes = 0;
    for (std::size_t i = 1; i < p.directions.size(); ++i) {
        changes += c.at(p.vertices[i - 1], p.directions[i - 1]) != c.at(p.vertices[i], p.directions[i]);
    }
    return changes;
}

enum class WitnessKind { MonoPath, MonoGeodesic, OneChangeGeodesic, MinChangePath };

inline constexpr const char* to_string(WitnessKind k) {
    switch (k) {
    case WitnessKind::MonoPath:
        return "mono-path";
    case WitnessKind::MonoGeodesic:
        return "mono-geodesic";
    case WitnessKind::OneChangeGeodesic:
        return "one-change-geodesic";
    case WitnessKind::MinChangePath:
        return "min-change-path";
    }
    return "?";
}

// A path between antipodal vertices x and antipode(x) with a colour pattern.
struct AntipodalWitness {
    WitnessKind kind = WitnessKind::MonoPath;
    GeodesicPath path;

    Vertex x() const { return path.front(); }
    Vertex y() const { return path.back(); }
};

inline bool is_simple(const GeodesicPath& p) {
    std::vector<Vertex> vs = p.vertices;
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

// Structural check that recomputes everything from the path itself.
inline bool validate_witness(const EdgeColouring& c, const AntipodalWitness& w) {
    const int n = c.dimension();
    const auto& p = w.path;
    if (!is_walk(p, n) || !is_simple(p) || p.length() == 0 || p.back() != antipode(p.front(), n)) {
        return false;
    }
    const int changes = count_colour_changes(c, p);
    switch (w.kind) {
    case WitnessKind::MonoPath:
        return changes == 0;
    case WitnessKind::MonoGeodesic:
        return changes == 0 && is_geodesic(p, n);
    case WitnessKind::OneChangeGeodesic:
        return changes <= 1 && is_geodesic(p, n);
    case WitnessKind::MinChangePath:
        return true;
    }
    return false;
}

namespace detail {

inline void check_subset_cap(int n, const SearchCaps& caps, const char* what) {
    if (n > caps.subset_dp_max_n) {
        throw cap_exceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds the subset-DP cap " +
                           std::to_string(caps.subset_dp_max_n));
    }
}

// Starts modulo antipodal symmetry: one of each {x, x'}.
inline Vertex half_starts(int n) { return Vertex{1} << (n - 1); }

struct DisjointSets {
    std::vector<Vertex> parent;
    explicit DisjointSets(std::size_t size) : parent(size) { std::iota(parent.begin(), parent.end(), Vertex{0}); }
    Vertex find(Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

inline DisjointSets colour_components(const EdgeColouring& c, Colour col) {
    const int n = c.dimension();
    DisjointSets ds(std::size_t{1} << n);
    for (std::size_t id = 0; id < c.edge_count(); ++id) {
        if (c[id] == col) {
            Edge e = edge_at(id, n);
            ds.unite(e.lo, e.hi());
        }
    }
    return ds;
}

} // namespace detail

// Breadth-first search in each colour class for x ~ antipode(x).
inline std::optional<AntipodalWitness> find_monochromatic_antipodal_path(const EdgeColouring& c) {
    const int n = c.dimension();
    const std::size_t size = std::size_t{1} << n;
    for (Colour col : {Colour::Red, Colour::Blue}) {
        auto ds = detail::colour_components(c, col);
        for (Vertex x = 0; x < detail::half_starts(n); ++x) {
            const Vertex target = antipode(x, n);
            if (ds.find(x) != ds.find(target)) {
                continue;
            }
            std::vector<Vertex> prev(size, UINT32_MAX);
            std::deque<Vertex> queue{x};
            prev[x] = x;
            while (!queue.empty() && prev[target] == UINT32_MAX) {
                Vertex u = queue.front();
                queue.pop_front();
                for (Direction d = 0; d < n; ++d) {
                    Vertex w = u ^ bit(d);
                    if (prev[w] == UINT32_MAX && c.at(u, d) == col) {
                        prev[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            std::vector<Vertex> rev{target};
            while (rev.back() != x) {
                rev.push_back(prev[rev.back()]);
            }
            return AntipodalWitness{WitnessKind::MonoPath, path_from_vertices({rev.rbegin(), rev.rend()})};
        }
    }
    return std::nullopt;
}

// Subset DP: a geodesic from x is determined by the set m of directions used
// so far, and its current vertex is x ^ m.
inline std::optional<AntipodalWitness> find_monochromatic_antipodal_geodesic(const EdgeColouring& c,
                                                                             const SearchCaps& caps = {}) {
    const int n = c.dimension();
    detail::check_subset_cap(n, caps, "find_monochromatic_antipodal_geodesic");
    const std::size_t size = std::size_t{1} << n;
    const Vertex all = full_mask(n);
    std::vector<std::int8_t> via(size);
    for (Vertex x = 0; x < detail::half_starts(n); ++x) {
        for (Colour col : {Colour::Red, Colour::Blue}) {
            std::fill(via.begin(), via.end(), -1);
            via[0] = static_cast<std::int8_t>(n); // reached, no incoming step
            for (Vertex m = 0; m < all && via[all] < 0; ++m) {
                if (via[m] < 0) {
                    continue;
                }
                for (Direction d = 0; d < n; ++d) {
                    if (!(m & bit(d)) && via[m | bit(d)] < 0 && c.at(x ^ m, d) == col) {
                        via[m | bit(d)] = static_cast<std::int8_t>(d);
                    }
                }
            }
            if (via[all] < 0) {
                continue;
            }
            std::vector<Vertex> rev;
            for (Vertex m = all;; m ^= bit(via[m])) {
                rev.push_back(x ^ m);
                if (m == 0) {
                    break;
                }
            }
            return AntipodalWitness{WitnessKind::MonoGeodesic, path_from_vertices({rev.rbegin(), rev.rend()})};
        }
    }
    return std::nullopt;
}

// Subset DP over (used directions, current colour, changed yet).
inline std::optional<AntipodalWitness> find_one_change_antipodal_geodesic(const EdgeColouring& c,
                                                                          const SearchCaps& caps = {}) {
    const int n = c.dimension();
    detail::check_subset_cap(n, caps, "find_one_change_antipodal_geodesic");
    const std::size_t size = std::size_t{1} << n;
    const Vertex all = full_mask(n);
    // state = m * 4 + colour * 2 + changed; value = (previous phase << 5 | dir) + 1, 0 = unreached
    constexpr std::uint16_t start_mark = 0xFFFF;
    std::vector<std::uint16_t> from(size * 4);
    auto index = [](Vertex m, int phase) { return static_cast<std::size_t>(m) * 4 + static_cast<std::size_t>(phase); };

    for (Vertex x = 0; x < detail::half_starts(n); ++x) {
        std::fill(from.begin(), from.end(), 0);
        from[index(0, 0)] = start_mark; // red, unchanged
        from[index(0, 2)] = start_mark; // blue, unchanged
        int found = -1;
        for (Vertex m = 0; m < all && found < 0; ++m) {
            for (int phase = 0; phase < 4; ++phase) {
                if (!from[index(m, phase)]) {
                    continue;
                }
                const auto col = static_cast<Colour>(phase >> 1);
                const bool changed = phase & 1;
                for (Direction d = 0; d < n; ++d) {
                    if (m & bit(d)) {
                        continue;
                    }
                    const Colour edge_col = c.at(x ^ m, d);
                    int next;
                    if (edge_col == col) {
                        next = phase;
                    } else if (!changed && m != 0) {
                        next = (static_cast<int>(edge_col) << 1) | 1;
                    } else {
                        continue;
                    }
                    auto& slot = from[index(m | bit(d), next)];
                    if (!slot) {
                        slot = static_cast<std::uint16_t>(((phase << 5) | d) + 1);
                    }
                }
            }
        }
        for (int phase = 0; phase < 4; ++phase) {
            if (from[index(all, phase)]) {
                found = phase;
                break;
            }
        }
        if (found < 0) {
            continue;
        }
        std::vector<Vertex> rev;
        Vertex m = all;
        int phase = found;
        while (true) {
            rev.push_back(x ^ m);
            if (m == 0) {
                break;
            }
            const int code = from[index(m, phase)] - 1;
            m ^= bit(code & 0x1F);
            phase = code >> 5;
        }
        return AntipodalWitness{WitnessKind::OneChangeGeodesic, path_from_vertices({rev.rbegin(), rev.rend()})};
    }
    return std::nullopt;
}

struct MinChanges {
    int changes = 0;
    AntipodalWitness witness;
};

// Chronological loop erasure of a vertex walk.
inline std::vector<Vertex> loop_erase(const std::vector<Vertex>& walk) {
    std::vector<Vertex> path;
    std::vector<std::pair<Vertex, std::size_t>> seen; // vertex -> position in path
    auto position = [&](Vertex v) -> std::optional<std::size_t> {
        for (const auto& [u, pos] : seen) {
            if (u == v) {
                return pos;
            }
        }
        return std::nullopt;
    };
    for (Vertex v : walk) {
        if (auto pos = position(v)) {
            path.resize(*pos + 1);
            std::erase_if(seen, [&](const auto& entry) { return entry.second > *pos; });
        } else {
            seen.push_back({v, path.size()});
            path.push_back(v);
        }
    }
    return path;
}

// Minimum, over antipodal pairs, of the fewest colour changes on a path
// between them. 0/1 BFS over (vertex, colour of the last edge); the walk
// optimum is loop-erased into a simple path with the same count.
inline MinChanges min_colour_changes_antipodal(const EdgeColouring& c) {
    const int n = c.dimension();
    const std::size_t states = std::size_t{2} << n;
    constexpr int unreached = INT_MAX;
    constexpr std::uint32_t from_source = UINT32_MAX;
    std::vector<int> dist(states);
    std::vector<std::uint32_t> parent(states);

    int best = unreached;
    std::vector<Vertex> best_walk;
    for (Vertex x = 0; x < detail::half_starts(n) && best > 0; ++x) {
        std::fill(dist.begin(), dist.end(), unreached);
        std::deque<std::uint32_t> queue;
        for (Direction d = 0; d < n; ++d) {
            const Vertex w = x ^ bit(d);
            const auto s = static_cast<std::uint32_t>(w * 2 + static_cast<unsigned>(c.at(x, d)));
            dist[s] = 0;
            parent[s] = from_source;
            queue.push_back(s);
        }
        while (!queue.empty()) {
            const std::uint32_t s = queue.front();
            queue.pop_front();
            const Vertex v = s >> 1;
            const unsigned col = s & 1;
            for (Direction d = 0; d < n; ++d) {
                const unsigned edge_col = static_cast<unsigned>(c.at(v, d));
                const int cost = dist[s] + (edge_col != col);
                const auto t = static_cast<std::uint32_t>(((v ^ bit(d)) << 1) | edge_col);
                if (cost < dist[t]) {
                    dist[t] = cost;
                    parent[t] = s;
                    if (edge_col == col) {
                        queue.push_front(t);
                    } else {
                        queue.push_back(t);
                    }
                }
            }
        }
        const Vertex target = antipode(x, n);
        for (unsigned col = 0; col < 2; ++col) {
            const std::uint32_t s = target * 2 + col;
            if (dist[s] < best) {
                best = dist[s];
                std::vector<Vertex> rev;
                for (std::uint32_t cur = s; cur != from_source; cur = parent[cur]) {
                    rev.push_back(cur >> 1);
                }
                rev.push_back(x);
                best_walk.assign(rev.rbegin(), rev.rend());
            }
        }
    }

    auto path = path_from_vertices(loop_erase(best_walk));
    if (count_colour_changes(c, path) != best) {
        throw std::logic_error("loop erasure changed the colour-change count");
    }
    return {best, AntipodalWitness{WitnessKind::MinChangePath, std::move(path)}};
}

// A monochromatic geodesic of length at least ceil(n/2): take a one-colour
// component of average degree >= n/2 and run the increasing-geodesic DP on it.
inline GeodesicPath monochromatic_half_geodesic(const EdgeColouring& c) {
    const int n = c.dimension();
    const std::size_t size = std::size_t{1} << n;
    for (Colour col : {Colour::Red, Colour::Blue}) {
        auto ds = detail::colour_components(c, col);
        std::vector<std::int64_t> verts(size, 0), edges(size, 0);
        for (Vertex v = 0; v < size; ++v) {
            ++verts[ds.find(v)];
        }
        for (std::size_t id = 0; id < c.edge_count(); ++id) {
            if (c[id] == col) {
                ++edges[ds.find(edge_at(id, n).lo)];
            }
        }
        for (Vertex root = 0; root < size; ++root) {
            // 2|E|/|V| >= n/2
            if (ds.find(root) != root || 4 * edges[root] < n * verts[root]) {
                continue;
            }
            std::vector<Vertex> members;
            std::vector<Edge> member_edges;
            for (Vertex v = 0; v < size; ++v) {
                if (ds.find(v) == root) {
                    members.push_back(v);
                    for (Direction d = 0; d < n; ++d) {
                        if (!(v & bit(d)) && c.at(v, d) == col) {
                            member_edges.push_back(Edge{v, d});
                        }
                    }
                }
            }
            return longest_geodesic_lower_bound(make_subgraph(n, members, member_edges));
        }
    }
    throw std::logic_error("no colour component with average degree n/2");
}

// Embed Q_n as the face x_n = 0 of Q_{n+1} and extend c antipodally. Edges in
// the new direction are paired {lo, antipode_n(lo)}. For odd n the member whose
// lo has even weight is red; for even n both have the same weight, so the one
// with the smaller lo is red.
inline EdgeColouring lift_to_antipodal(const EdgeColouring& c) {
    const int n = c.dimension();
    EdgeColouring out(n + 1);
    const Vertex top = bit(n);
    for (std::size_t id = 0; id < c.edge_count(); ++id) {
        const Edge e = edge_at(id, n);
        out.set(e, c[id]);
        out.set(antipodal_edge(e, n + 1), opposite(c[id]));
    }
    for (Vertex lo = 0; lo < top; ++lo) {
        const bool red = n % 2 == 1 ? std::popcount(lo) % 2 == 0 : lo < antipode(lo, n);
        const Colour col = red ? Colour::Red : Colour::Blue;
        out.set(Edge{lo, n}, col);
    }
    return out;
}

inline EdgeColouring restrict_to_bottom(const EdgeColouring& c) {
    const int n = c.dimension() - 1;
    EdgeColouring out(n);
    for (std::size_t id = 0; id < out.edge_count(); ++id) {
        out.set(id, c[edge_at(id, n)]);
    }
    return out;
}

inline GeodesicPath antipodal_image(const GeodesicPath& p, int n) {
    GeodesicPath out = p;
    for (Vertex& v : out.vertices) {
        v = antipode(v, n);
    }
    return out;
}

// A monochromatic antipodal geodesic P of the lifted colouring, closed up
// with its antipodal image, crosses the new direction twice; the arc inside
// the bottom face is an antipodal geodesic of Q_n with at most one change.
inline AntipodalWitness derive_B_from_A(const EdgeColouring& c, const SearchCaps& caps = {}) {
    const int n = c.dimension();
    const EdgeColouring lifted = lift_to_antipodal(c);
    auto mono = find_monochromatic_antipodal_geodesic(lifted, caps);
    if (!mono) {
        throw search_failed("no monochromatic antipodal geodesic in the lifted colouring");
    }
    const GeodesicPath& p = mono->path;
    const GeodesicPath image = antipodal_image(p, n + 1);

    // Closed walk P then P^A; P ends where P^A starts.
    std::vector<Vertex> cycle(p.vertices.begin(), p.vertices.end() - 1);
    cycle.insert(cycle.end(), image.vertices.begin(), image.vertices.end() - 1);
    const std::size_t len = cycle.size();
    const Vertex top = bit(n);

    std::size_t start = len;
    for (std::size_t i = 0; i < len; ++i) {
        if (!(cycle[i] & top) && (cycle[(i + len - 1) % len] & top)) {
            start = i;
            break;
        }
    }
    if (start == len) {
        throw std::logic_error("lifted geodesic never leaves the bottom face");
    }
    std::vector<Vertex> arc;
    for (std::size_t i = start; !(cycle[i % len] & top); ++i) {
        arc.push_back(cycle[i % len]);
    }
    AntipodalWitness w{WitnessKind::OneChangeGeodesic, path_from_vertices(std::move(arc))};
    if (!validate_witness(c, w)) {
        throw std::logic_error("restricted cycle is not a one-change antipodal geodesic");
    }
    return w;
}

// A one-change antipodal geodesic P = P1 P2 of an antipodal colouring gives
// the monochromatic antipodal geodesic P2 P1^A.
inline AntipodalWitness derive_A_from_B(const EdgeColouring& c, const SearchCaps& caps = {}) {
    const int n = c.dimension();
    if (!is_antipodal(c)) {
        throw precondition_error("colouring is not antipodal");
    }
    auto b = find_one_change_antipodal_geodesic(c, caps);
    if (!b) {
        throw search_failed("no antipodal geodesic with at most one colour change");
    }
    const GeodesicPath& p = b->path;
    std::size_t split = p.length();
    for (std::size_t i = 1; i < p.length(); ++i) {
        if (c.at(p.vertices[i - 1], p.directions[i - 1]) != c.at(p.vertices[i], p.directions[i])) {
            split = i;
            break;
        }
    }
    AntipodalWitness w{WitnessKind::MonoGeodesic, p};
    if (split != p.length()) {
        // P1 = vertices[0..split], P2 = vertices[split..]
        std::vector<Vertex> vs(p.vertices.begin() + static_cast<std::ptrdiff_t>(split), p.vertices.end());
        for (std::size_t i = 1; i <= split; ++i) {
            vs.push_back(antipode(p.vertices[i], n));
        }
        w.path = path_from_vertices(std::move(vs));
    }
    if (!validate_witness(c, w)) {
        throw std::logic_error("derived path is not a monochromatic antipodal geodesic");
    }
    return w;
}

} // namespace cubegeo
