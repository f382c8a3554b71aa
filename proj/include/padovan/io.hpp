#pragma once

/**
 * Deterministic text exports: Graphviz DOT, JSON, and a TSV edge list.
 * Identical graphs serialize to byte-identical output.
 */

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "padovan/graph.hpp"

namespace padovan {

using ordered_json = nlohmann::ordered_json;

inline std::string to_dot(const labeled_graph& g) {
    std::ostringstream out;
    out << "graph padovan_lab {\n";
    out << "  // family=" << (g.family.empty() ? "adhoc" : g.family)
        << " n=" << g.params.n << " k=" << g.params.k << " p=" << g.params.p
        << " q=" << g.params.q << "\n";
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        out << "  \"" << g.label(static_cast<int>(v)) << "\";\n";
    for (std::size_t u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(static_cast<int>(u)))
            if (static_cast<int>(u) < v)
                out << "  \"" << g.label(static_cast<int>(u)) << "\" -- \""
                    << g.label(v) << "\";\n";
    out << "}\n";
    return out.str();
}

// {family, params:{n,k,p,q}, vertices:[labels], edges:[[i,j]...]} with
// i < j and edge pairs sorted.
inline ordered_json to_json(const labeled_graph& g) {
    ordered_json doc;
    doc["family"] = g.family.empty() ? "adhoc" : g.family;
    doc["params"] = {{"n", g.params.n},
                     {"k", g.params.k},
                     {"p", g.params.p},
                     {"q", g.params.q}};
    doc["vertices"] = g.vertices();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(static_cast<int>(u)))
            if (static_cast<int>(u) < v) edges.emplace_back(static_cast<int>(u), v);
    std::sort(edges.begin(), edges.end());
    doc["edges"] = ordered_json::array();
    for (auto [u, v] : edges) doc["edges"].push_back({u, v});
    return doc;
}

inline labeled_graph from_json(const ordered_json& doc) {
    std::vector<std::string> vertices =
        doc.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    labeled_graph g = labeled_graph::from_edges(std::move(vertices), edges);
    const std::string family = doc.at("family").get<std::string>();
    g.family = family == "adhoc" ? "" : family;
    const auto& params = doc.at("params");
    g.params = {params.at("n").get<long long>(), params.at("k").get<long long>(),
                params.at("p").get<long long>(), params.at("q").get<long long>()};
    return g;
}

// "label1\tlabel2" per edge, lines sorted.
inline std::string to_edgelist(const labeled_graph& g) {
    std::vector<std::string> lines;
    for (std::size_t u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(static_cast<int>(u)))
            if (static_cast<int>(u) < v)
                lines.push_back(g.label(static_cast<int>(u)) + "\t" +
                                g.label(v));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace padovan
