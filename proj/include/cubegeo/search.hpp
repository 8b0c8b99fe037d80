#pragma once

// Counterexample searches for the antipodal-colouring conjectures.
//
// NORINE and A range over antipodal colourings, B over all 2-colourings.
// Exhaustive mode enumerates colouring indices; sample mode draws colouring i
// from Rng::stream(seed, i). Work is processed in fixed-size blocks and the
// first counterexample by index wins, so the report does not depend on the
// number of workers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubegeo/colourings.hpp"
#include "cubegeo/io.hpp"
#include "cubegeo/parallel.hpp"
#include "cubegeo/rng.hpp"

namespace cubegeo {

enum class Conjecture { Norine, A, B };
enum class SearchMode { Exhaustive, Sample };

inline const char* to_string(Conjecture c) {
    switch (c) {
    case Conjecture::Norine:
        return "NORINE";
    case Conjecture::A:
        return "A";
    case Conjecture::B:
        return "B";
    }
    return "?";
}

inline Conjecture conjecture_from_string(const std::string& s) {
    if (s == "NORINE") {
        return Conjecture::Norine;
    }
    if (s == "A") {
        return Conjecture::A;
    }
    if (s == "B") {
        return Conjecture::B;
    }
    throw std::invalid_argument("unknown conjecture '" + s + "' (expected NORINE, A or B)");
}

inline const char* to_string(SearchMode m) { return m == SearchMode::Exhaustive ? "exhaustive" : "sample"; }

inline SearchMode search_mode_from_string(const std::string& s) {
    if (s == "exhaustive") {
        return SearchMode::Exhaustive;
    }
    if (s == "sample") {
        return SearchMode::Sample;
    }
    throw std::invalid_argument("unknown search mode '" + s + "' (expected exhaustive or sample)");
}

struct SearchOptions {
    Conjecture conjecture = Conjecture::Norine;
    SearchMode mode = SearchMode::Exhaustive;
    int n = 3;
    std::uint64_t budget = 0; // sample size; 0 in exhaustive mode means "the whole space"
    std::uint64_t seed = 0;
    int jobs = 1;
    SearchCaps caps;
    bool min_change_stats = true;
    std::uint64_t block = 4096;
};

class search_space_error : public error {
public:
    using error::error;
};

// Number of colourings in the exhaustive space.
inline std::uint64_t exhaustive_space(Conjecture c, int n) {
    if (c == Conjecture::B) {
        if (n < 1 || n > 3) {
            throw search_space_error("exhaustive B search needs 1 <= n <= 3 (2^12 colourings at n = 3)");
        }
        return std::uint64_t{1} << cube_edge_count(n);
    }
    if (n < 2 || n > 4) {
        throw search_space_error("exhaustive antipodal search needs 2 <= n <= 4 (2^16 colourings at n = 4)");
    }
    return std::uint64_t{1} << (cube_edge_count(n) / 2);
}

inline EdgeColouring search_instance(const SearchOptions& opt, std::uint64_t index) {
    const bool antipodal = opt.conjecture != Conjecture::B;
    if (opt.mode == SearchMode::Exhaustive) {
        return antipodal ? antipodal_colouring_from_index(opt.n, index) : colouring_from_index(opt.n, index);
    }
    Rng rng = Rng::stream(opt.seed, index);
    return antipodal ? random_antipodal_colouring(opt.n, rng) : random_colouring(opt.n, rng);
}

// The conjecture's checker; nullopt means `c` is a counterexample.
inline std::optional<AntipodalWitness> check_conjecture(Conjecture conj, const EdgeColouring& c,
                                                        const SearchCaps& caps = {}) {
    switch (conj) {
    case Conjecture::Norine:
        return find_monochromatic_antipodal_path(c);
    case Conjecture::A:
        return find_monochromatic_antipodal_geodesic(c, caps);
    case Conjecture::B:
        return find_one_change_antipodal_geodesic(c, caps);
    }
    return std::nullopt;
}

inline json run_search(const SearchOptions& opt) {
    std::uint64_t total;
    if (opt.mode == SearchMode::Exhaustive) {
        total = exhaustive_space(opt.conjecture, opt.n);
        if (opt.budget != 0 && opt.budget != total) {
            throw search_space_error("exhaustive space has " + std::to_string(total) + " colourings, budget is " +
                                     std::to_string(opt.budget));
        }
    } else {
        if (opt.budget == 0) {
            throw search_space_error("sample mode needs a positive budget");
        }
        if (opt.conjecture != Conjecture::B && opt.n < 2) {
            throw search_space_error("antipodal colourings need n >= 2");
        }
        total = opt.budget;
    }

    struct Outcome {
        bool holds;
        int min_changes;
    };
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> counterexample;
    std::vector<std::uint64_t> histogram;
    const std::uint64_t block = opt.block == 0 ? 4096 : opt.block;
    for (std::uint64_t first = 0; first < total && !counterexample; first += block) {
        const std::uint64_t count = std::min(block, total - first);
        auto outcomes = parallel_map(first, count, opt.jobs, [&](std::uint64_t i) {
            const EdgeColouring c = search_instance(opt, i);
            const bool holds = check_conjecture(opt.conjecture, c, opt.caps).has_value();
            const int changes = opt.min_change_stats ? min_colour_changes_antipodal(c).changes : -1;
            return Outcome{holds, changes};
        });
        for (std::uint64_t k = 0; k < count; ++k) {
            ++checked;
            if (outcomes[k].min_changes >= 0) {
                const auto m = static_cast<std::size_t>(outcomes[k].min_changes);
                if (histogram.size() <= m) {
                    histogram.resize(m + 1, 0);
                }
                ++histogram[m];
            }
            if (!outcomes[k].holds) {
                counterexample = first + k;
                break;
            }
        }
    }

    json params{{"conjecture", to_string(opt.conjecture)},
                {"mode", to_string(opt.mode)},
                {"n", opt.n},
                {"budget", opt.budget},
                {"space", total}};
    json aggregate{{"colourings_checked", checked}, {"counterexamples", counterexample ? 1 : 0}};
    if (opt.min_change_stats) {
        aggregate["min_colour_changes"] =
            json{{"max", histogram.empty() ? json(nullptr) : json(histogram.size() - 1)}, {"histogram", histogram}};
    }
    json report{{"task", "search"}, {"parameters", std::move(params)}, {"seed", opt.seed}};
    if (counterexample) {
        report["counterexample"] = json{{"index", *counterexample}, {"colouring", to_json(search_instance(opt, *counterexample))}};
    } else {
        report["counterexample"] = nullptr;
    }
    report["aggregate"] = std::move(aggregate);
    report["pass"] = !counterexample.has_value();
    return report;
}

} // namespace cubegeo
