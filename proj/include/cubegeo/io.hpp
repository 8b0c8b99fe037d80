#pragma once

// JSON files for graphs, colourings and reports.
//
//   graph      {"n": 3, "vertices": [0, 1], "edges": [[0, 0]]}       edges are [lo, dir]
//   colouring  {"n": 2, "pairs": [[0, 0, "red"], ...]}               every edge of Q_n once
//
// Field order is fixed (ordered_json), so equal values serialize to equal bytes.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cubegeo/colourings.hpp"
#include "cubegeo/core.hpp"
#include "cubegeo/geodesics.hpp"

namespace cubegeo {

using json = nlohmann::ordered_json;

class parse_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

namespace detail {

inline const json& field(const json& obj, const char* name, const std::string& where) {
    if (!obj.is_object()) {
        throw parse_error(where + ": expected an object");
    }
    auto it = obj.find(name);
    if (it == obj.end()) {
        throw parse_error(where + ": missing field '" + name + "'");
    }
    return *it;
}

inline std::int64_t integer(const json& v, const std::string& where, std::int64_t lo, std::int64_t hi) {
    if (!v.is_number_integer()) {
        throw parse_error(where + ": expected an integer");
    }
    auto x = v.get<std::int64_t>();
    if (x < lo || x > hi) {
        throw parse_error(where + ": value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    }
    return x;
}

inline const json& array(const json& v, const std::string& where) {
    if (!v.is_array()) {
        throw parse_error(where + ": expected an array");
    }
    return v;
}

} // namespace detail

inline json to_json(const CubeSubgraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({e.lo, e.dir});
    }
    return json{{"n", g.dimension()}, {"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

inline CubeSubgraph graph_from_json(const json& j) {
    const int n = static_cast<int>(detail::integer(detail::field(j, "n", "graph"), "field 'n'", 0, max_dimension));
    const auto limit = static_cast<std::int64_t>(full_mask(n));
    std::vector<Vertex> vertices;
    const auto& vs = detail::array(detail::field(j, "vertices", "graph"), "field 'vertices'");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        vertices.push_back(static_cast<Vertex>(
            detail::integer(vs[i], "field 'vertices[" + std::to_string(i) + "]'", 0, limit)));
    }
    std::vector<Vertex> present = vertices;
    std::sort(present.begin(), present.end());
    auto has = [&](Vertex v) { return std::binary_search(present.begin(), present.end(), v); };
    std::vector<Edge> edges;
    const auto& es = detail::array(detail::field(j, "edges", "graph"), "field 'edges'");
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string where = "field 'edges[" + std::to_string(i) + "]'";
        if (!es[i].is_array() || es[i].size() != 2) {
            throw parse_error(where + ": expected [lo, dir]");
        }
        const Edge e{static_cast<Vertex>(detail::integer(es[i][0], where + "[0]", 0, limit)),
                     static_cast<Direction>(detail::integer(es[i][1], where + "[1]", 0, n - 1))};
        if (e.lo & bit(e.dir)) {
            throw parse_error(where + ": lo has bit dir set (lo must be the lower endpoint)");
        }
        if (!has(e.lo) || !has(e.hi())) {
            throw parse_error(where + ": endpoint not listed in 'vertices'");
        }
        edges.push_back(e);
    }
    try {
        return make_subgraph(n, vertices, edges);
    } catch (const error& e) {
        throw parse_error(std::string("graph: ") + e.what());
    }
}

inline json to_json(const EdgeColouring& c) {
    json pairs = json::array();
    const int n = c.dimension();
    for (Vertex lo = 0; lo <= full_mask(n); ++lo) {
        for (Direction d = 0; d < n; ++d) {
            if (!(lo & bit(d))) {
                pairs.push_back({lo, d, to_string(c[Edge{lo, d}])});
            }
        }
    }
    return json{{"n", n}, {"pairs", std::move(pairs)}};
}

inline EdgeColouring colouring_from_json(const json& j) {
    const int n =
        static_cast<int>(detail::integer(detail::field(j, "n", "colouring"), "field 'n'", 1, max_dimension));
    EdgeColouring c(n);
    std::vector<bool> seen(c.edge_count(), false);
    const auto& ps = detail::array(detail::field(j, "pairs", "colouring"), "field 'pairs'");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::string where = "field 'pairs[" + std::to_string(i) + "]'";
        if (!ps[i].is_array() || ps[i].size() != 3) {
            throw parse_error(where + ": expected [lo, dir, colour]");
        }
        Edge e{static_cast<Vertex>(detail::integer(ps[i][0], where + "[0]", 0, full_mask(n))),
               static_cast<Direction>(detail::integer(ps[i][1], where + "[1]", 0, n - 1))};
        if (e.lo & bit(e.dir)) {
            throw parse_error(where + ": bit dir of lo must be 0");
        }
        const auto& col = ps[i][2];
        if (col != "red" && col != "blue") {
            throw parse_error(where + "[2]: colour must be \"red\" or \"blue\"");
        }
        const std::size_t id = edge_id(e, n);
        if (seen[id]) {
            throw parse_error(where + ": duplicate edge");
        }
        seen[id] = true;
        c.set(id, col == "red" ? Colour::Red : Colour::Blue);
    }
    if (ps.size() != c.edge_count()) {
        throw parse_error("colouring: " + std::to_string(ps.size()) + " edges listed, Q_" + std::to_string(n) +
                          " has " + std::to_string(c.edge_count()));
    }
    return c;
}

inline json to_json(const GeodesicPath& p) {
    return json{{"vertices", p.vertices}, {"directions", p.directions}};
}

inline json to_json(const EdgeColouring& c, const AntipodalWitness& w) {
    return json{{"kind", to_string(w.kind)},
                {"from", w.x()},
                {"to", w.y()},
                {"colour_changes", count_colour_changes(c, w.path)},
                {"path", to_json(w.path)}};
}

// Parses JSON text; syntax errors report line and column.
inline json parse_json_text(const std::string& text, const std::string& name) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string reason = e.what();
        if (auto at = reason.find(": "); at != std::string::npos) {
            reason = reason.substr(at + 2); // drop nlohmann's "[json.exception...] parse error at ..." prefix
        }
        throw parse_error(name + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON (" +
                          reason + ")");
    }
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

inline std::string serialize(const json& j) { return j.dump(2) + "\n"; }

inline void save_json_file(const json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot write " + path);
    }
    out << serialize(j);
    if (!out) {
        throw io_error("write failed for " + path);
    }
}

inline CubeSubgraph load_graph(const std::string& path) {
    auto j = load_json_file(path);
    try {
        return graph_from_json(j);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

inline void save_graph(const CubeSubgraph& g, const std::string& path) { save_json_file(to_json(g), path); }

inline EdgeColouring load_colouring(const std::string& path) {
    auto j = load_json_file(path);
    try {
        return colouring_from_json(j);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

inline void save_colouring(const EdgeColouring& c, const std::string& path) { save_json_file(to_json(c), path); }

} // namespace cubegeo
