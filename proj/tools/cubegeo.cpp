// cubegeo: verification jobs, conjecture searches, instance analysis and
// instance generation for hypercube subgraphs and edge colourings.
//
// Exit codes: 0 all checks pass, 2 violation or counterexample, 1 usage/IO error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubegeo/cubegeo.hpp"

namespace {

using namespace cubegeo;

constexpr int exit_pass = 0;
constexpr int exit_usage = 1;
constexpr int exit_violation = 2;

// "6", "4..10" or "4,6,8"
std::vector<int> parse_dimensions(const std::string& text) {
    std::vector<int> out;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) {
            throw std::invalid_argument("empty dimension range " + text);
        }
        for (int n = lo; n <= hi; ++n) {
            out.push_back(n);
        }
        return out;
    }
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        out.push_back(std::stoi(item));
    }
    if (out.empty()) {
        throw std::invalid_argument("no dimension given");
    }
    return out;
}

std::vector<double> parse_densities(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        double p = std::stod(item);
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("density " + item + " outside [0, 1]");
        }
        out.push_back(p);
    }
    if (out.empty()) {
        throw std::invalid_argument("no density given");
    }
    return out;
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << serialize(report);
    } else {
        save_json_file(report, out_path);
    }
}

int report_exit(const json& report) { return report.at("pass").get<bool>() ? exit_pass : exit_violation; }

json analyze_graph(const CubeSubgraph& g, const SearchCaps& caps) {
    json out{{"task", "analyze"}, {"kind", "graph"}, {"graph", to_json(g)}};
    if (g.empty()) {
        out["pass"] = true;
        return out;
    }
    const Rational avg = average_degree(g);
    const auto table = increasing_geodesic_table(g, DirectionOrdering::identity(g.dimension()));
    const auto longest = longest_geodesic_lower_bound(g);
    const auto greedy = greedy_geodesic(g);
    const auto pair = max_hamming_pair(g);
    const auto two_e = 2 * static_cast<std::int64_t>(g.size());

    out["average_degree"] = avg.to_string();
    out["increasing_table"] = json{{"sum_L", table.total()}, {"two_e", two_e}, {"lengths", table.lengths()}};
    out["longest_increasing_geodesic"] = to_json(longest);
    out["greedy_geodesic"] = to_json(greedy);
    out["max_hamming_pair"] = json{{"pair", {pair.x, pair.y}}, {"distance", pair.distance}};
    bool pass = table.total() >= two_e && static_cast<std::int64_t>(longest.length()) >= avg.ceil() &&
                pair.distance >= avg.ceil();
    if (g.dimension() <= caps.oracle_max_n || g.size() <= caps.oracle_max_edges) {
        auto bf = brute_force_longest_geodesic(g, caps);
        out["brute_force_longest_geodesic"] = to_json(bf);
        pass = pass && bf.length() >= longest.length();
    } else {
        out["brute_force_longest_geodesic"] = nullptr;
    }
    out["pass"] = pass;
    return out;
}

json analyze_colouring(const EdgeColouring& c, const SearchCaps& caps) {
    const int n = c.dimension();
    const bool antipodal = is_antipodal(c);
    json out{{"task", "analyze"}, {"kind", "colouring"}, {"n", n}, {"antipodal", antipodal}};
    bool pass = true;

    auto witness_or_null = [&](const std::optional<AntipodalWitness>& w) { return w ? to_json(c, *w) : json(nullptr); };
    auto norine = find_monochromatic_antipodal_path(c);
    out["mono_antipodal_path"] = witness_or_null(norine);
    pass = pass && (norine || !antipodal || n < 2);
    if (n <= caps.subset_dp_max_n) {
        auto a = find_monochromatic_antipodal_geodesic(c, caps);
        auto b = find_one_change_antipodal_geodesic(c, caps);
        out["mono_antipodal_geodesic"] = witness_or_null(a);
        out["one_change_antipodal_geodesic"] = witness_or_null(b);
        pass = pass && (a || !antipodal || n < 2) && b.has_value();
    } else {
        out["mono_antipodal_geodesic"] = nullptr;
        out["one_change_antipodal_geodesic"] = nullptr;
    }
    auto mc = min_colour_changes_antipodal(c);
    out["min_colour_changes"] = json{{"value", mc.changes}, {"witness", to_json(c, mc.witness)}};
    auto half = monochromatic_half_geodesic(c);
    out["mono_half_geodesic"] = to_json(half);
    pass = pass && static_cast<int>(half.length()) >= (n + 1) / 2;
    out["pass"] = pass;
    return out;
}

struct CapsFlags {
    int oracle_max_n = SearchCaps{}.oracle_max_n;
    std::size_t oracle_max_edges = SearchCaps{}.oracle_max_edges;
    int subset_dp_max_n = SearchCaps{}.subset_dp_max_n;

    void attach(CLI::App* cmd) {
        cmd->add_option("--oracle-max-n", oracle_max_n, "Brute-force oracle: dimension cap")->capture_default_str();
        cmd->add_option("--oracle-max-edges", oracle_max_edges, "Brute-force oracle: edge cap")->capture_default_str();
        cmd->add_option("--subset-dp-max-n", subset_dp_max_n, "Subset-DP searches: dimension cap")
            ->capture_default_str();
    }
    SearchCaps caps() const { return {oracle_max_n, oracle_max_edges, subset_dp_max_n}; }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geodesics in hypercube subgraphs and antipodal colourings"};
    app.require_subcommand(1);

    int jobs = default_jobs();
    std::uint64_t seed = 0;
    std::string out_path;

    // verify
    auto* verify = app.add_subcommand("verify", "Check one theorem over seeded instances");
    std::string theorem = "T4";
    std::uint64_t trials = 100;
    std::string model = "induced-random";
    std::string dims_text = "6";
    std::string density_text = "0.5";
    InstanceSpec base;
    int orderings = 5;
    CapsFlags verify_caps;
    verify->add_option("theorem", theorem, "T2, T4, T5, FS, COMP, KAT or COR")->required();
    verify->add_option("--trials", trials, "Number of instances")->capture_default_str();
    verify->add_option("--model", model,
                       "induced-random, edge-random, hamming-ball, full-cube, disjoint-cubes or from-file")
        ->capture_default_str();
    verify->add_option("--n", dims_text, "Dimension: 6, 4..10 or 4,6,8 (cycled over trials)")->capture_default_str();
    verify->add_option("--density", density_text, "Density or comma list (cycled)")->capture_default_str();
    verify->add_option("--radius", base.radius, "hamming-ball radius")->capture_default_str();
    verify->add_option("--centre", base.centre, "hamming-ball centre")->capture_default_str();
    verify->add_option("--cube-dim", base.cube_dim, "disjoint-cubes: dimension of each copy")->capture_default_str();
    verify->add_option("--copies", base.copies, "disjoint-cubes: number of copies")->capture_default_str();
    verify->add_option("--input", base.path, "from-file: graph JSON");
    verify->add_option("--orderings", orderings, "T5: random orderings per instance")->capture_default_str();
    verify->add_option("--seed", seed, "Master seed")->capture_default_str();
    verify->add_option("--jobs", jobs, "Worker threads (default $CUBEGEO_JOBS or 1)");
    verify->add_option("--out", out_path, "Write the report here instead of stdout");
    verify_caps.attach(verify);

    // search
    auto* search = app.add_subcommand("search", "Search for counterexamples to NORINE, A or B");
    std::string conjecture = "NORINE";
    std::string mode = "exhaustive";
    int search_n = 3;
    std::uint64_t budget = 0;
    bool no_stats = false;
    CapsFlags search_caps;
    search->add_option("--conjecture", conjecture, "NORINE, A or B")->capture_default_str();
    search->add_option("--mode", mode, "exhaustive or sample")->capture_default_str();
    search->add_option("--n", search_n, "Dimension")->capture_default_str();
    search->add_option("--trials,--budget", budget, "Colourings to sample (sample mode)")->capture_default_str();
    search->add_option("--seed", seed, "Master seed")->capture_default_str();
    search->add_option("--jobs", jobs, "Worker threads (default $CUBEGEO_JOBS or 1)");
    search->add_option("--out", out_path, "Write the report here instead of stdout");
    search->add_flag("--no-min-changes", no_stats, "Skip the minimum colour-change statistics");
    search_caps.attach(search);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Analyse a graph or colouring JSON file");
    std::string input;
    CapsFlags analyze_caps;
    analyze->add_option("input", input, "Graph or colouring JSON")->required();
    analyze->add_option("--out", out_path, "Write the analysis here instead of stdout");
    analyze_caps.attach(analyze);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph or colouring instance");
    std::string gen_model = "induced-random";
    InstanceSpec gen_spec;
    double gen_density = 0.5;
    gen->add_option("--model", gen_model,
                    "Graph model (see verify) or colouring, antipodal-colouring, direction-split")
        ->capture_default_str();
    gen->add_option("--n", gen_spec.n, "Dimension")->capture_default_str();
    gen->add_option("--density", gen_density, "Density for random graph models")->capture_default_str();
    gen->add_option("--radius", gen_spec.radius, "hamming-ball radius")->capture_default_str();
    gen->add_option("--centre", gen_spec.centre, "hamming-ball centre")->capture_default_str();
    gen->add_option("--cube-dim", gen_spec.cube_dim, "disjoint-cubes: dimension of each copy")->capture_default_str();
    gen->add_option("--copies", gen_spec.copies, "disjoint-cubes: number of copies")->capture_default_str();
    gen->add_option("--seed", seed, "Seed")->capture_default_str();
    gen->add_option("--out", out_path, "Write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*verify) {
            VerifyOptions opt;
            opt.theorem = theorem_from_string(theorem);
            opt.trials = trials;
            opt.base = base;
            opt.base.model = model_from_string(model);
            opt.dimensions = parse_dimensions(dims_text);
            opt.densities = parse_densities(density_text);
            opt.seed = seed;
            opt.jobs = jobs;
            opt.caps = verify_caps.caps();
            opt.orderings = orderings;
            auto report = run_verify(opt);
            emit(report, out_path);
            return report_exit(report);
        }
        if (*search) {
            SearchOptions opt;
            opt.conjecture = conjecture_from_string(conjecture);
            opt.mode = search_mode_from_string(mode);
            opt.n = search_n;
            opt.budget = budget;
            opt.seed = seed;
            opt.jobs = jobs;
            opt.caps = search_caps.caps();
            opt.min_change_stats = !no_stats;
            auto report = run_search(opt);
            emit(report, out_path);
            return report_exit(report);
        }
        if (*analyze) {
            const json doc = load_json_file(input);
            json report;
            if (doc.is_object() && doc.contains("pairs")) {
                report = analyze_colouring(colouring_from_json(doc), analyze_caps.caps());
            } else {
                report = analyze_graph(graph_from_json(doc), analyze_caps.caps());
            }
            report["input"] = input;
            emit(report, out_path);
            return report_exit(report);
        }
        if (*gen) {
            json doc;
            if (gen_model == "colouring") {
                Rng rng(seed);
                doc = to_json(random_colouring(gen_spec.n, rng));
            } else if (gen_model == "antipodal-colouring") {
                doc = to_json(random_antipodal_colouring(gen_spec.n, seed));
            } else if (gen_model == "direction-split") {
                doc = to_json(direction_split_colouring(gen_spec.n));
            } else {
                gen_spec.model = model_from_string(gen_model);
                gen_spec.density = gen_density;
                gen_spec.seed = seed;
                doc = to_json(generate(gen_spec));
            }
            emit(doc, out_path);
            return exit_pass;
        }
    } catch (const std::exception& e) {
        std::cerr << "cubegeo: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
