#pragma once

#include "lpakit/graph.hpp"

#include <json.hpp>

#include <string>

namespace lpakit {

/// `{"vertices": [...], "edges": [{"id": .., "src": .., "dst": ..}, ...]}`.
/// Unknown keys and duplicate ids raise InputError.
Graph graph_from_json(const nlohmann::json& j);
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);

nlohmann::json graph_to_json(const Graph& g);

}  // namespace lpakit
