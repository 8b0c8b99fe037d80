#pragma once

// Verification jobs: each theorem identifier runs its inequality over a batch
// of seeded instances and produces a JSON report. Reports contain no timing
// or host data, so a rerun with the same options gives identical bytes.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubegeo/colourings.hpp"
#include "cubegeo/core.hpp"
#include "cubegeo/generate.hpp"
#include "cubegeo/geodesics.hpp"
#include "cubegeo/io.hpp"
#include "cubegeo/parallel.hpp"
#include "cubegeo/rng.hpp"
#include "cubegeo/setfamilies.hpp"

namespace cubegeo {

enum class Theorem { T2, T4, T5, FS, COMP, KAT, COR };

inline const char* to_string(Theorem t) {
    switch (t) {
    case Theorem::T2:
        return "T2";
    case Theorem::T4:
        return "T4";
    case Theorem::T5:
        return "T5";
    case Theorem::FS:
        return "FS";
    case Theorem::COMP:
        return "COMP";
    case Theorem::KAT:
        return "KAT";
    case Theorem::COR:
        return "COR";
    }
    return "?";
}

inline Theorem theorem_from_string(const std::string& s) {
    for (Theorem t : {Theorem::T2, Theorem::T4, Theorem::T5, Theorem::FS, Theorem::COMP, Theorem::KAT, Theorem::COR}) {
        if (s == to_string(t)) {
            return t;
        }
    }
    throw std::invalid_argument("unknown theorem identifier '" + s + "' (expected T2, T4, T5, FS, COMP, KAT or COR)");
}

struct VerifyOptions {
    Theorem theorem = Theorem::T4;
    std::uint64_t trials = 100;
    InstanceSpec base;                 // model and shape parameters
    std::vector<int> dimensions{6};    // trial i uses dimensions[i % size]
    std::vector<double> densities{0.5}; // and densities[(i / |dimensions|) % size]
    std::uint64_t seed = 0;
    int jobs = 1;
    SearchCaps caps;
    int orderings = 5;                 // random orderings per instance for T5
};

namespace detail {

struct TrialOutcome {
    json record;
    bool ok = true;
    bool applicable = true;
    std::int64_t slack = 0;
};

inline InstanceSpec trial_spec(const VerifyOptions& opt, std::uint64_t i, Rng& rng) {
    InstanceSpec s = opt.base;
    const auto dims = opt.dimensions.size();
    s.n = opt.dimensions[i % dims];
    s.density = opt.densities[(i / dims) % opt.densities.size()];
    s.seed = rng();
    return s;
}

inline TrialOutcome check_t4(const CubeSubgraph& g, Rng& rng) {
    auto ord = DirectionOrdering::random(g.dimension(), rng);
    auto table = increasing_geodesic_table(g, ord);
    const std::int64_t s = table.total();
    const auto two_e = 2 * static_cast<std::int64_t>(g.size());
    TrialOutcome out;
    out.slack = s - two_e;
    out.ok = out.slack >= 0;
    out.record = json{{"vertices", g.order()}, {"edges", g.size()}, {"ordering", ord.order()},
                      {"sum_L", s},         {"two_e", two_e}};
    return out;
}

inline TrialOutcome check_t2(const CubeSubgraph& g, const SearchCaps& caps) {
    const Rational avg = average_degree(g);
    const auto need = avg.ceil();
    auto dp = longest_geodesic_lower_bound(g);
    TrialOutcome out;
    out.record = json{{"vertices", g.order()}, {"edges", g.size()}, {"average_degree", avg.to_string()},
                      {"dp_length", dp.length()}};
    auto best = static_cast<std::int64_t>(dp.length());
    out.ok = is_geodesic(dp, g.dimension()) && lies_in(dp, g) && best >= need;
    if (g.dimension() <= caps.oracle_max_n || g.size() <= caps.oracle_max_edges) {
        auto bf = brute_force_longest_geodesic(g, caps);
        out.record["brute_length"] = bf.length();
        out.ok = out.ok && bf.length() >= dp.length();
        best = static_cast<std::int64_t>(bf.length());
    } else {
        out.record["brute_length"] = nullptr;
    }
    out.slack = static_cast<std::int64_t>(dp.length()) - need;
    out.record["longest_found"] = best;
    return out;
}

inline TrialOutcome check_t5(const CubeSubgraph& g, const VerifyOptions& opt, Rng& rng) {
    const Rational avg = average_degree(g);
    const std::int64_t d = avg.floor();
    TrialOutcome out;
    out.record = json{{"vertices", g.order()}, {"edges", g.size()}, {"average_degree", avg.to_string()}, {"d", d}};
    if (d < 1) {
        out.applicable = false;
        out.record["applicable"] = false;
        return out;
    }
    const int di = static_cast<int>(d);
    const auto order = static_cast<std::uint64_t>(g.order());
    // count >= d!|G|/2  <=>  2 count >= d!|G|
    const unsigned __int128 bound2 = static_cast<unsigned __int128>(factorial(di)) * order;

    // oriented: an edge is an increasing 1-geodesic ending at either endpoint
    std::uint64_t min_increasing = std::numeric_limits<std::uint64_t>::max();
    for (int k = 0; k <= opt.orderings; ++k) {
        auto ord = k == 0 ? DirectionOrdering::identity(g.dimension()) : DirectionOrdering::random(g.dimension(), rng);
        min_increasing = std::min(min_increasing, count_oriented_increasing_geodesics(g, di, ord));
    }
    out.record["min_increasing_count"] = min_increasing;
    out.ok = min_increasing >= order;
    out.slack = static_cast<std::int64_t>(min_increasing) - static_cast<std::int64_t>(order);

    if (g.dimension() <= opt.caps.oracle_max_n || g.size() <= opt.caps.oracle_max_edges) {
        const std::uint64_t count = enumerate_geodesics_of_length(g, di, opt.caps);
        const unsigned __int128 count2 = static_cast<unsigned __int128>(count) * 2;
        out.record["geodesic_count"] = count;
        out.record["bound_times_two"] = static_cast<std::uint64_t>(bound2);
        out.ok = out.ok && count2 >= bound2;
        const auto diff = static_cast<__int128>(count2) - static_cast<__int128>(bound2);
        out.slack = std::min(out.slack, static_cast<std::int64_t>(diff));
    } else {
        out.record["geodesic_count"] = nullptr;
    }
    return out;
}

inline TrialOutcome check_fs(const CubeSubgraph& g) {
    const Rational avg = average_degree(g);
    auto pair = max_hamming_pair(g);
    TrialOutcome out;
    out.slack = pair.distance - avg.ceil();
    out.ok = out.slack >= 0;
    out.record = json{{"vertices", g.order()},
                      {"edges", g.size()},
                      {"average_degree", avg.to_string()},
                      {"pair", {pair.x, pair.y}},
                      {"distance", pair.distance}};
    return out;
}

// Compression acts on vertex sets, so the baseline is the induced subgraph.
inline TrialOutcome check_comp(const CubeSubgraph& instance) {
    const CubeSubgraph g = induced_subgraph(instance.dimension(), instance.vertices());
    SetFamily fam(g.dimension(), g.vertices());
    const auto base_edges = static_cast<std::int64_t>(g.size());
    const int base_dist = max_hamming_pair(g).distance;
    TrialOutcome out;
    std::int64_t min_gain = std::numeric_limits<std::int64_t>::max();
    for (int i = 0; i < fam.ground_size(); ++i) {
        SetFamily comp = compress_element(fam, i);
        CubeSubgraph h = induced_subgraph(comp);
        const auto gain = static_cast<std::int64_t>(h.size()) - base_edges;
        min_gain = std::min(min_gain, gain);
        out.ok = out.ok && comp.size() == fam.size() && gain >= 0 && max_hamming_pair(h).distance <= base_dist;
    }
    SetFamily down = full_compress(fam);
    CubeSubgraph h = induced_subgraph(down);
    bool degrees_ok = true;
    for (Vertex a : down.sets()) {
        degrees_ok = degrees_ok && down_degree(down, a) == std::popcount(a);
    }
    const bool downset = is_downset(down);
    const bool identity = total_member_size(down) == static_cast<std::int64_t>(h.size());
    out.ok = out.ok && downset && down.size() == fam.size() && degrees_ok && identity &&
             h.size() >= g.size() && max_hamming_pair(h).distance <= base_dist;
    out.slack = fam.ground_size() == 0 ? 0 : min_gain;
    out.record = json{{"members", fam.size()},
                      {"edges", g.size()},
                      {"min_edge_gain", out.slack},
                      {"compressed_edges", h.size()},
                      {"downset", downset},
                      {"level_identity", identity}};
    return out;
}

inline TrialOutcome check_kat(int n, Rng& rng) {
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(6, n))));
    const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    const int count = 1 + static_cast<int>(rng.below(20));
    auto fam = random_t_intersecting_family(n, k, t, count, rng);
    const auto shadow_size = iterated_shadow(fam, t).size();
    TrialOutcome out;
    out.ok = katona_check(fam, t);
    out.slack = static_cast<std::int64_t>(shadow_size) - static_cast<std::int64_t>(fam.size());
    out.record = json{{"n", n}, {"k", k}, {"t", t}, {"members", fam.size()}, {"shadow_size", shadow_size}};
    if (!out.ok) {
        out.record["repro"] = json{{"n", n}, {"k", k}, {"t", t}, {"sets", fam.family().sets()}};
    }
    return out;
}

inline TrialOutcome check_cor(int n, Rng& rng) {
    auto c = random_colouring(n, rng);
    auto p = monochromatic_half_geodesic(c);
    TrialOutcome out;
    const std::int64_t need = (n + 1) / 2;
    out.slack = static_cast<std::int64_t>(p.length()) - need;
    out.ok = is_geodesic(p, n) && count_colour_changes(c, p) == 0 && out.slack >= 0;
    out.record = json{{"n", n}, {"length", p.length()}, {"colour", p.length() ? to_string(c.at(p.front(), p.directions[0])) : "none"}};
    if (!out.ok) {
        out.record["repro"] = to_json(c);
    }
    return out;
}

inline TrialOutcome run_trial(const VerifyOptions& opt, std::uint64_t i) {
    Rng rng = Rng::stream(opt.seed, i);
    const InstanceSpec spec = trial_spec(opt, i, rng);
    TrialOutcome out;
    if (opt.theorem == Theorem::KAT) {
        out = check_kat(spec.n, rng);
    } else if (opt.theorem == Theorem::COR) {
        out = check_cor(spec.n, rng);
    } else {
        const CubeSubgraph g = generate(spec);
        switch (opt.theorem) {
        case Theorem::T4:
            out = check_t4(g, rng);
            break;
        case Theorem::T2:
            out = check_t2(g, opt.caps);
            break;
        case Theorem::T5:
            out = check_t5(g, opt, rng);
            break;
        case Theorem::FS:
            out = check_fs(g);
            break;
        case Theorem::COMP:
            out = check_comp(g);
            break;
        default:
            break;
        }
        if (!out.ok) {
            out.record["repro"] = to_json(g);
        }
        json rec{{"index", i}, {"instance", to_json(spec)}};
        rec.update(out.record);
        out.record = std::move(rec);
    }
    if (!out.record.contains("index")) {
        json rec{{"index", i}};
        rec.update(out.record);
        out.record = std::move(rec);
    }
    out.record["slack"] = out.slack;
    out.record["ok"] = out.ok;
    return out;
}

} // namespace detail

inline json run_verify(const VerifyOptions& opt) {
    if (opt.dimensions.empty() || opt.densities.empty()) {
        throw std::invalid_argument("verify needs at least one dimension and one density");
    }
    for (int n : opt.dimensions) {
        check_dimension(n);
        if ((opt.theorem == Theorem::KAT || opt.theorem == Theorem::COR) && n < 1) {
            throw dimension_error(std::string(to_string(opt.theorem)) + " needs n >= 1");
        }
    }
    auto outcomes =
        parallel_map(0, opt.trials, opt.jobs, [&](std::uint64_t i) { return detail::run_trial(opt, i); });

    json records = json::array();
    std::uint64_t violations = 0, applicable = 0, equality = 0;
    std::int64_t min_slack = std::numeric_limits<std::int64_t>::max();
    for (auto& o : outcomes) {
        violations += !o.ok;
        if (o.applicable) {
            ++applicable;
            equality += o.slack == 0;
            min_slack = std::min(min_slack, o.slack);
        }
        records.push_back(std::move(o.record));
    }
    json params{{"theorem", to_string(opt.theorem)},
                {"trials", opt.trials},
                {"model", to_string(opt.base.model)},
                {"dimensions", opt.dimensions},
                {"densities", opt.densities},
                {"orderings", opt.orderings},
                {"caps", {{"oracle_max_n", opt.caps.oracle_max_n},
                          {"oracle_max_edges", opt.caps.oracle_max_edges},
                          {"subset_dp_max_n", opt.caps.subset_dp_max_n}}}};
    json base = to_json(opt.base);
    base.erase("n");
    base.erase("density");
    base.erase("seed");
    params["template"] = std::move(base);

    json aggregate{{"instances", opt.trials},
                   {"applicable", applicable},
                   {"violations", violations},
                   {"equality_cases", equality}};
    aggregate["min_slack"] = applicable ? json(min_slack) : json(nullptr);
    return json{{"task", "verify"},
                {"parameters", std::move(params)},
                {"seed", opt.seed},
                {"records", std::move(records)},
                {"aggregate", std::move(aggregate)},
                {"pass", violations == 0}};
}

} // namespace cubegeo
