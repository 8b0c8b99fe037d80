#pragma once

// Families of subsets of [n] = {0, ..., n-1} stored as bitmasks: down-
// compression, downsets, shadows, t-intersection and level profiles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cubegeo/core.hpp"

namespace cubegeo {

class SetFamily {
public:
    SetFamily() = default;
    SetFamily(int n, std::span<const Vertex> sets) : n_(n), sets_(canonical_vertices(n, sets)) {}
    SetFamily(int n, std::initializer_list<Vertex> sets)
        : SetFamily(n, std::span<const Vertex>(sets.begin(), sets.size())) {}

    int ground_size() const { return n_; }
    const std::vector<Vertex>& sets() const { return sets_; }
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    bool contains(Vertex a) const { return std::binary_search(sets_.begin(), sets_.end(), a); }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    int n_ = 0;
    std::vector<Vertex> sets_;
};

// A family in which every member has exactly k elements.
class UniformFamily {
public:
    UniformFamily() = default;
    UniformFamily(SetFamily family, int k) : family_(std::move(family)), k_(k) {
        if (k < 0 || k > family_.ground_size()) {
            throw std::invalid_argument("uniform size " + std::to_string(k) + " outside [0, n]");
        }
        for (Vertex a : family_.sets()) {
            if (std::popcount(a) != k) {
                throw std::invalid_argument("member " + std::to_string(a) + " does not have " + std::to_string(k) +
                                            " elements");
            }
        }
    }

    const SetFamily& family() const { return family_; }
    int k() const { return k_; }
    std::size_t size() const { return family_.size(); }

    friend bool operator==(const UniformFamily&, const UniformFamily&) = default;

private:
    SetFamily family_;
    int k_ = 0;
};

inline CubeSubgraph induced_subgraph(const SetFamily& fam) { return induced_subgraph(fam.ground_size(), fam.sets()); }

// Down-compression in element i. A member containing i moves to A - i unless
// A - i is already present; the family size never changes.
inline SetFamily compress_element(const SetFamily& fam, int i) {
    if (i < 0 || i >= fam.ground_size()) {
        throw std::out_of_range("element " + std::to_string(i) + " outside [0, " + std::to_string(fam.ground_size()) +
                                ")");
    }
    std::vector<Vertex> out;
    out.reserve(fam.size());
    for (Vertex a : fam.sets()) {
        if ((a & bit(i)) && !fam.contains(a ^ bit(i))) {
            out.push_back(a ^ bit(i));
        } else {
            out.push_back(a);
        }
    }
    return SetFamily(fam.ground_size(), out);
}

inline bool is_downset(const SetFamily& fam) {
    for (Vertex a : fam.sets()) {
        for (Vertex rest = a; rest; rest &= rest - 1) {
            if (!fam.contains(a ^ (rest & -rest))) {
                return false;
            }
        }
    }
    return true;
}

// Compress in elements 0, 1, ..., n-1 cyclically until a full pass is stable.
inline SetFamily full_compress(const SetFamily& fam) {
    SetFamily cur = fam;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < cur.ground_size(); ++i) {
            SetFamily next = compress_element(cur, i);
            if (next != cur) {
                changed = true;
                cur = std::move(next);
            }
        }
    }
    return cur;
}

inline UniformFamily shadow(const UniformFamily& fam) {
    if (fam.k() == 0) {
        throw precondition_error("shadow of a 0-uniform family");
    }
    std::vector<Vertex> out;
    for (Vertex a : fam.family().sets()) {
        for (Vertex rest = a; rest; rest &= rest - 1) {
            out.push_back(a ^ (rest & -rest));
        }
    }
    return UniformFamily(SetFamily(fam.family().ground_size(), out), fam.k() - 1);
}

inline UniformFamily iterated_shadow(const UniformFamily& fam, int l) {
    if (l < 0 || l > fam.k()) {
        throw precondition_error("shadow depth " + std::to_string(l) + " outside [0, " + std::to_string(fam.k()) + "]");
    }
    UniformFamily cur = fam;
    for (int step = 0; step < l; ++step) {
        cur = shadow(cur);
    }
    return cur;
}

// |A & B| >= t for every pair, including A = B.
inline bool is_t_intersecting(const SetFamily& fam, int t) {
    if (t < 0) {
        throw std::invalid_argument("negative intersection size");
    }
    const auto& s = fam.sets();
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i; j < s.size(); ++j) {
            if (std::popcount(s[i] & s[j]) < t) {
                return false;
            }
        }
    }
    return true;
}

// |shadow^t(A)| >= |A| for a t-intersecting k-uniform family. Always true by
// Katona's theorem; false would mean a bug in the shadow code.
inline bool katona_check(const UniformFamily& fam, int t) {
    if (t < 0 || t > fam.k()) {
        throw precondition_error("t = " + std::to_string(t) + " outside [0, k]");
    }
    if (!is_t_intersecting(fam.family(), t)) {
        throw precondition_error("family is not " + std::to_string(t) + "-intersecting");
    }
    return iterated_shadow(fam, t).size() >= fam.size();
}

// Number of members of each size 0..n.
inline std::vector<std::int64_t> level_profile(const SetFamily& fam) {
    std::vector<std::int64_t> profile(static_cast<std::size_t>(fam.ground_size()) + 1, 0);
    for (Vertex a : fam.sets()) {
        ++profile[std::popcount(a)];
    }
    return profile;
}

inline std::int64_t total_member_size(const SetFamily& fam) {
    auto profile = level_profile(fam);
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < profile.size(); ++k) {
        sum += static_cast<std::int64_t>(k) * profile[k];
    }
    return sum;
}

inline SetFamily level(const SetFamily& fam, int k) {
    std::vector<Vertex> out;
    for (Vertex a : fam.sets()) {
        if (std::popcount(a) == k) {
            out.push_back(a);
        }
    }
    return SetFamily(fam.ground_size(), out);
}

// Neighbours of A in the family obtained by removing one element.
inline int down_degree(const SetFamily& fam, Vertex a) {
    int deg = 0;
    for (Vertex rest = a; rest; rest &= rest - 1) {
        deg += fam.contains(a ^ (rest & -rest));
    }
    return deg;
}

// For a downset with average degree d (as an induced subgraph): no level k
// with k >= d/2 contains A, B (A = B allowed) with |A | B| >= d. Equivalent to
// each such level being (2k - ceil(d) + 1)-intersecting.
inline bool feder_subi_intersecting_check(const SetFamily& fam, const Rational& d) {
    if (!is_downset(fam)) {
        throw precondition_error("family is not a downset");
    }
    const std::int64_t need = d.ceil(); // |A | B| >= d  <=>  |A | B| >= ceil(d)
    for (int k = 0; k <= fam.ground_size(); ++k) {
        if (Rational(2 * k) < d) {
            continue;
        }
        SetFamily lv = level(fam, k);
        const auto& s = lv.sets();
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i; j < s.size(); ++j) {
                if (std::popcount(s[i] | s[j]) >= need) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace cubegeo
