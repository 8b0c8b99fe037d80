#pragma once

// Slow, direct reference implementations used only by tests. They share no
// code with the library beyond the value types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cubegeo/colourings.hpp"
#include "cubegeo/core.hpp"
#include "cubegeo/geodesics.hpp"

namespace oracle {

using cubegeo::Vertex;

// neighbour lists keyed by vertex, built straight from the edge list
inline std::map<Vertex, std::vector<Vertex>> neighbours(const cubegeo::CubeSubgraph& g) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (Vertex v : g.vertices()) {
        adj[v];
    }
    for (const auto& e : g.edges()) {
        adj[e.lo].push_back(e.lo | (Vertex{1} << e.dir));
        adj[e.lo | (Vertex{1} << e.dir)].push_back(e.lo);
    }
    return adj;
}

inline int flipped_direction(Vertex a, Vertex b) { return std::countr_zero(a ^ b); }

// Visits every path with pairwise distinct directions (as a vertex list),
// including single vertices, each orientation separately.
inline void each_geodesic(const cubegeo::CubeSubgraph& g, const std::function<void(const std::vector<Vertex>&)>& fn) {
    auto adj = neighbours(g);
    std::vector<Vertex> path;
    std::function<void(Vertex, unsigned)> go = [&](Vertex v, unsigned used) {
        path.push_back(v);
        fn(path);
        for (Vertex w : adj[v]) {
            unsigned d = 1u << flipped_direction(v, w);
            if (!(used & d)) {
                go(w, used | d);
            }
        }
        path.pop_back();
    };
    for (Vertex s : g.vertices()) {
        go(s, 0);
    }
}

inline int longest_geodesic(const cubegeo::CubeSubgraph& g) {
    int best = 0;
    each_geodesic(g, [&](const std::vector<Vertex>& p) { best = std::max(best, static_cast<int>(p.size()) - 1); });
    return best;
}

// unordered count of geodesics with exactly d edges
inline std::uint64_t geodesics_of_length(const cubegeo::CubeSubgraph& g, int d) {
    std::uint64_t oriented = 0;
    each_geodesic(g, [&](const std::vector<Vertex>& p) { oriented += static_cast<int>(p.size()) - 1 == d; });
    return oriented / 2;
}

// For every vertex, the longest path ending there whose direction ranks
// strictly increase.
inline std::map<Vertex, int> longest_increasing_ending_at(const cubegeo::CubeSubgraph& g,
                                                          const std::vector<int>& rank_of_direction) {
    std::map<Vertex, int> best;
    for (Vertex v : g.vertices()) {
        best[v] = 0;
    }
    auto adj = neighbours(g);
    std::function<void(Vertex, int, int)> go = [&](Vertex v, int last_rank, int len) {
        best[v] = std::max(best[v], len);
        for (Vertex w : adj[v]) {
            int r = rank_of_direction[flipped_direction(v, w)];
            if (r > last_rank) {
                go(w, r, len + 1);
            }
        }
    };
    for (Vertex s : g.vertices()) {
        go(s, -1, 0);
    }
    return best;
}

inline std::uint64_t oriented_increasing_of_length(const cubegeo::CubeSubgraph& g, int d,
                                                   const std::vector<int>& rank_of_direction) {
    std::uint64_t count = 0;
    each_geodesic(g, [&](const std::vector<Vertex>& p) {
        if (static_cast<int>(p.size()) - 1 != d) {
            return;
        }
        for (std::size_t i = 2; i < p.size(); ++i) {
            if (rank_of_direction[flipped_direction(p[i - 2], p[i - 1])] >=
                rank_of_direction[flipped_direction(p[i - 1], p[i])]) {
                return;
            }
        }
        ++count;
    });
    return count;
}

inline int max_hamming(const cubegeo::CubeSubgraph& g) {
    int best = 0;
    for (Vertex a : g.vertices()) {
        for (Vertex b : g.vertices()) {
            best = std::max(best, std::popcount(a ^ b));
        }
    }
    return best;
}

// colour of the edge {a, b} read off the colouring
inline cubegeo::Colour colour(const cubegeo::EdgeColouring& c, Vertex a, Vertex b) { return c.between(a, b); }

inline int changes_along(const cubegeo::EdgeColouring& c, const std::vector<Vertex>& p) {
    int changes = 0;
    for (std::size_t i = 2; i < p.size(); ++i) {
        changes += colour(c, p[i - 2], p[i - 1]) != colour(c, p[i - 1], p[i]);
    }
    return changes;
}

// Minimum colour changes over every simple path joining a vertex to its
// antipode. Exponential; n <= 3 only.
inline int min_changes_simple_antipodal(const cubegeo::EdgeColouring& c) {
    const int n = c.dimension();
    const Vertex full = (Vertex{1} << n) - 1;
    int best = 1 << 20;
    std::vector<Vertex> path;
    std::vector<bool> seen(std::size_t{1} << n);
    std::function<void(Vertex, Vertex)> go = [&](Vertex v, Vertex target) {
        path.push_back(v);
        seen[v] = true;
        if (v == target) {
            best = std::min(best, changes_along(c, path));
        } else {
            for (int d = 0; d < n; ++d) {
                Vertex w = v ^ (Vertex{1} << d);
                if (!seen[w]) {
                    go(w, target);
                }
            }
        }
        seen[v] = false;
        path.pop_back();
    };
    for (Vertex x = 0; x <= full; ++x) {
        go(x, x ^ full);
    }
    return best;
}

// Geodesics from x to its antipode are exactly the orderings of all n
// directions; returns the fewest colour changes over all of them and all x.
inline int min_changes_antipodal_geodesic(const cubegeo::EdgeColouring& c) {
    const int n = c.dimension();
    std::vector<int> perm(static_cast<std::size_t>(n));
    int best = 1 << 20;
    for (Vertex x = 0; x < (Vertex{1} << n); ++x) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<Vertex> p{x};
            for (int d : perm) {
                p.push_back(p.back() ^ (Vertex{1} << d));
            }
            best = std::min(best, changes_along(c, p));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return best;
}

// some colour class joins some vertex to its antipode
inline bool has_mono_antipodal_path(const cubegeo::EdgeColouring& c) {
    const int n = c.dimension();
    const Vertex full = (Vertex{1} << n) - 1;
    for (auto col : {cubegeo::Colour::Red, cubegeo::Colour::Blue}) {
        for (Vertex x = 0; x <= full; ++x) {
            std::vector<bool> seen(std::size_t{1} << n);
            std::vector<Vertex> stack{x};
            seen[x] = true;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (int d = 0; d < n; ++d) {
                    Vertex w = v ^ (Vertex{1} << d);
                    if (!seen[w] && colour(c, v, w) == col) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
                }
            }
            if (seen[x ^ full]) {
                return true;
            }
        }
    }
    return false;
}

// set families as sorted element lists, independent of the bitmask layout
using Set = std::set<int>;
using Family = std::set<Set>;

inline Set as_set(Vertex mask) {
    Set s;
    for (int i = 0; i < 32; ++i) {
        if (mask >> i & 1) {
            s.insert(i);
        }
    }
    return s;
}

inline Family as_family(const std::vector<Vertex>& masks) {
    Family f;
    for (Vertex m : masks) {
        f.insert(as_set(m));
    }
    return f;
}

inline Family compress(const Family& f, int i) {
    Family out;
    for (const Set& a : f) {
        if (!a.count(i)) {
            out.insert(a);
            continue;
        }
        Set smaller = a;
        smaller.erase(i);
        out.insert(f.count(smaller) ? a : smaller);
    }
    return out;
}

inline Family shadow(const Family& f) {
    Family out;
    for (const Set& a : f) {
        for (int x : a) {
            Set b = a;
            b.erase(x);
            out.insert(b);
        }
    }
    return out;
}

} // namespace oracle
