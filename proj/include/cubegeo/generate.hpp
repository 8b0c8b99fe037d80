#pragma once

// Deterministic instance generators. The seed alone fixes the instance.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cubegeo/core.hpp"
#include "cubegeo/io.hpp"
#include "cubegeo/rng.hpp"
#include "cubegeo/setfamilies.hpp"

namespace cubegeo {

enum class Model { InducedRandom, EdgeRandom, HammingBall, FullCube, DisjointCubes, FromFile };

inline const char* to_string(Model m) {
    switch (m) {
    case Model::InducedRandom:
        return "induced-random";
    case Model::EdgeRandom:
        return "edge-random";
    case Model::HammingBall:
        return "hamming-ball";
    case Model::FullCube:
        return "full-cube";
    case Model::DisjointCubes:
        return "disjoint-cubes";
    case Model::FromFile:
        return "from-file";
    }
    return "?";
}

inline Model model_from_string(const std::string& s) {
    for (Model m : {Model::InducedRandom, Model::EdgeRandom, Model::HammingBall, Model::FullCube,
                    Model::DisjointCubes, Model::FromFile}) {
        if (s == to_string(m)) {
            return m;
        }
    }
    throw std::invalid_argument("unknown model '" + s + "'");
}

struct InstanceSpec {
    Model model = Model::InducedRandom;
    int n = 6;
    double density = 0.5;  // induced-random, edge-random
    int radius = 1;        // hamming-ball
    Vertex centre = 0;     // hamming-ball
    int cube_dim = 2;      // disjoint-cubes
    int copies = 2;        // disjoint-cubes
    std::uint64_t seed = 0;
    std::string path;      // from-file
};

inline json to_json(const InstanceSpec& s) {
    json j{{"model", to_string(s.model)}, {"n", s.n}};
    switch (s.model) {
    case Model::InducedRandom:
    case Model::EdgeRandom:
        j["density"] = s.density;
        j["seed"] = s.seed;
        break;
    case Model::HammingBall:
        j["radius"] = s.radius;
        j["centre"] = s.centre;
        break;
    case Model::DisjointCubes:
        j["cube_dim"] = s.cube_dim;
        j["copies"] = s.copies;
        break;
    case Model::FromFile:
        j["path"] = s.path;
        break;
    case Model::FullCube:
        break;
    }
    return j;
}

inline CubeSubgraph generate(const InstanceSpec& spec) {
    const int n = spec.n;
    if (spec.model != Model::FromFile) {
        check_dimension(n);
    }
    switch (spec.model) {
    case Model::InducedRandom: {
        if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
            throw std::invalid_argument("density must lie in [0, 1]");
        }
        Rng rng(spec.seed);
        std::vector<Vertex> vs;
        for (Vertex v = 0; v <= full_mask(n); ++v) {
            if (rng.bernoulli(spec.density)) {
                vs.push_back(v);
            }
        }
        if (vs.empty()) {
            vs.push_back(static_cast<Vertex>(rng.below(std::uint64_t{1} << n)));
        }
        return induced_subgraph(n, vs);
    }
    case Model::EdgeRandom: {
        if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
            throw std::invalid_argument("density must lie in [0, 1]");
        }
        Rng rng(spec.seed);
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        for (Vertex v = 0; v <= full_mask(n); ++v) {
            for (Direction d = 0; d < n; ++d) {
                if (!(v & bit(d)) && rng.bernoulli(spec.density)) {
                    es.push_back(Edge{v, d});
                    vs.push_back(v);
                    vs.push_back(v | bit(d));
                }
            }
        }
        if (vs.empty()) {
            vs.push_back(static_cast<Vertex>(rng.below(std::uint64_t{1} << n)));
        }
        return make_subgraph(n, vs, es);
    }
    case Model::HammingBall: {
        if (spec.radius < 0 || spec.centre > full_mask(n)) {
            throw std::invalid_argument("hamming-ball needs radius >= 0 and a centre inside Q_n");
        }
        std::vector<Vertex> vs;
        for (Vertex v = 0; v <= full_mask(n); ++v) {
            if (hamming_distance(v, spec.centre) <= spec.radius) {
                vs.push_back(v);
            }
        }
        return induced_subgraph(n, vs);
    }
    case Model::FullCube:
        return full_cube(n);
    case Model::DisjointCubes: {
        // Copies of Q_d on coordinates [0, d), shifted by distinct even-weight
        // words on [d, n), so no two copies are adjacent.
        const int d = spec.cube_dim;
        if (d < 0 || d > n || spec.copies < 1) {
            throw std::invalid_argument("disjoint-cubes needs 0 <= cube_dim <= n and copies >= 1");
        }
        const int rest = n - d;
        const std::uint64_t available = rest == 0 ? 1 : std::uint64_t{1} << (rest - 1);
        if (static_cast<std::uint64_t>(spec.copies) > available) {
            throw std::invalid_argument("disjoint-cubes: " + std::to_string(spec.copies) + " copies of Q_" +
                                        std::to_string(d) + " do not fit in Q_" + std::to_string(n));
        }
        std::vector<Vertex> vs;
        int placed = 0;
        for (Vertex shift = 0; placed < spec.copies; ++shift) {
            if (std::popcount(shift) % 2 != 0) {
                continue;
            }
            for (Vertex low = 0; low <= full_mask(d); ++low) {
                vs.push_back((shift << d) | low);
            }
            ++placed;
        }
        return induced_subgraph(n, vs);
    }
    case Model::FromFile:
        return load_graph(spec.path);
    }
    throw std::logic_error("unhandled model");
}

inline SetFamily random_family(int n, double density, Rng& rng) {
    std::vector<Vertex> sets;
    for (Vertex v = 0; v <= full_mask(n); ++v) {
        if (rng.bernoulli(density)) {
            sets.push_back(v);
        }
    }
    return SetFamily(n, sets);
}

inline Vertex random_k_subset(int n, int k, Rng& rng) {
    std::vector<Direction> elems(static_cast<std::size_t>(n));
    std::iota(elems.begin(), elems.end(), 0);
    rng.shuffle(std::span<Direction>(elems));
    Vertex s = 0;
    for (int i = 0; i < k; ++i) {
        s |= bit(elems[i]);
    }
    return s;
}

// Random t-intersecting k-uniform family: `count` random k-sets through a
// common random t-set, followed by up to `count` random k-sets that are kept
// only if the family stays t-intersecting.
inline UniformFamily random_t_intersecting_family(int n, int k, int t, int count, Rng& rng) {
    if (t < 0 || k < t || k > n || count < 1) {
        throw std::invalid_argument("need 0 <= t <= k <= n and count >= 1");
    }
    const Vertex core = random_k_subset(n, t, rng);
    std::vector<Vertex> sets;
    for (int i = 0; i < count; ++i) {
        Vertex extra = random_k_subset(n - t, k - t, rng);
        // spread the (k - t)-subset of the remaining n - t elements outside the core
        Vertex s = core;
        int j = 0;
        for (Direction d = 0; d < n; ++d) {
            if (core & bit(d)) {
                continue;
            }
            if (extra & bit(j)) {
                s |= bit(d);
            }
            ++j;
        }
        sets.push_back(s);
    }
    for (int i = 0; i < count; ++i) {
        const Vertex s = random_k_subset(n, k, rng);
        bool ok = true;
        for (Vertex a : sets) {
            if (std::popcount(a & s) < t) {
                ok = false;
                break;
            }
        }
        if (ok) {
            sets.push_back(s);
        }
    }
    return UniformFamily(SetFamily(n, sets), k);
}

} // namespace cubegeo
