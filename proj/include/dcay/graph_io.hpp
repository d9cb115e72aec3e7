#pragma once

#include <string>
#include <string_view>

#include "dcay/graph.hpp"
#include "json.hpp"

namespace dcay {

/// Graphviz text; layered graphs get `r^i` / `s*r^i` vertex labels.
std::string export_dot(const Graph& g, std::string_view name = "G");

/// graph6 (no header). Orders above 62 use the long size prefix.
std::string export_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

/// {"order": N, "adj": [[...], ...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace dcay
