#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "chainsaw/graph.hpp"

namespace chainsaw {

enum class GraphFormat { EdgeList, Dimacs, Json };

std::optional<GraphFormat> parse_graph_format(std::string_view name);

// Rendering is byte-deterministic for a given graph:
//   edge-list  "u v\n" per edge with u <= v, loops as "v v", sorted.
//   dimacs     "p edge <order> <edges+loops>\n" then "e u v\n", 1-indexed.
//   json       {"edges":[[u,v],...],"loops":[...],"order":n,"roles":[...]}
std::string export_graph(const Graph& g, GraphFormat format);

/// Inverse of the json rendering. Throws std::invalid_argument on
/// malformed input.
Graph import_graph_json(std::string_view text);

}  // namespace chainsaw
