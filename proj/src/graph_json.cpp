#include "lpakit/graph_json.hpp"

#include "lpakit/errors.hpp"

#include <fstream>
#include <sstream>

namespace lpakit {

namespace {

const std::string& as_string(const nlohmann::json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

}  // namespace

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("graph must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "vertices" && key != "edges") throw InputError("unknown key '" + key + "' in graph");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw InputError("graph needs a 'vertices' array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(as_string(v, "vertex id"));

  std::vector<EdgeSpec> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_object()) throw InputError("edge must be an object");
      for (const auto& [key, _] : e.items())
        if (key != "id" && key != "src" && key != "dst")
          throw InputError("unknown key '" + key + "' in edge");
      if (!e.contains("id") || !e.contains("src") || !e.contains("dst"))
        throw InputError("edge needs 'id', 'src' and 'dst'");
      edges.push_back({as_string(e["id"], "edge id"), as_string(e["src"], "edge src"),
                       as_string(e["dst"], "edge dst")});
    }
  }
  return Graph(std::move(vertices), edges);
}

Graph parse_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw InputError(std::string("malformed graph JSON: ") + err.what());
  }
  return graph_from_json(j);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"id", e.id}, {"src", g.vertex_name(e.src)}, {"dst", g.vertex_name(e.dst)}});
  return {{"vertices", g.vertex_names()}, {"edges", edges}};
}

}  // namespace lpakit
