#include "lpakit/graph.hpp"

#include "lpakit/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace lpakit {

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("graph must have at least one vertex");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index.emplace(vertices_[i], i).second)
      throw InputError("duplicate vertex id '" + vertices_[i] + "'");
  }
  std::unordered_set<std::string> edge_ids;
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (const auto& spec : edges) {
    if (!edge_ids.insert(spec.id).second) throw InputError("duplicate edge id '" + spec.id + "'");
    auto s = index.find(spec.src);
    auto r = index.find(spec.dst);
    if (s == index.end())
      throw InputError("edge '" + spec.id + "' has undeclared source '" + spec.src + "'");
    if (r == index.end())
      throw InputError("edge '" + spec.id + "' has undeclared range '" + spec.dst + "'");
    out_[s->second].push_back(edges_.size());
    in_[r->second].push_back(edges_.size());
    edges_.push_back({spec.id, s->second, r->second});
  }
}

std::optional<std::size_t> Graph::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Graph::find_edge(const std::string& name) const {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].id == name) return e;
  return std::nullopt;
}

std::vector<std::size_t> Graph::regular_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (is_regular(v)) out.push_back(v);
  return out;
}

std::vector<std::size_t> Graph::sinks() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (is_sink(v)) out.push_back(v);
  return out;
}

std::vector<EdgeSpec> Graph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({e.id, vertices_[e.src], vertices_[e.dst]});
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.id != y.id || x.src != y.src || x.dst != y.dst) return false;
  }
  return true;
}

VertexClassification classify_vertices(const Graph& g) {
  VertexClassification c;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    (g.is_sink(v) ? c.sinks : c.regular).push_back(v);
    if (g.is_source(v)) c.sources.push_back(v);
  }
  return c;
}

IntMatrix incidence_matrix(const Graph& g) {
  const auto reg = g.regular_vertices();
  IntMatrix a = IntMatrix::Zero(static_cast<Eigen::Index>(reg.size()),
                                static_cast<Eigen::Index>(g.vertex_count()));
  for (std::size_t i = 0; i < reg.size(); ++i)
    for (std::size_t e : g.out_edges(reg[i])) a(i, g.edge(e).dst) += 1;
  return a;
}

IntMatrix bk_matrix(const Graph& g) {
  const auto reg = g.regular_vertices();
  const IntMatrix a = incidence_matrix(g);
  IntMatrix m(static_cast<Eigen::Index>(g.vertex_count()), static_cast<Eigen::Index>(reg.size()));
  for (Eigen::Index w = 0; w < m.rows(); ++w)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(w, j) = BigInt(static_cast<std::size_t>(w) == reg[j] ? 1 : 0) - a(j, w);
  return m;
}

IntMatrix bk_matrix_transpose(const Graph& g) { return bk_matrix(g).transpose(); }

bool has_cycle(const Graph& g) {
  // Kahn's algorithm: a cycle exists iff some vertex never reaches in-degree 0.
  std::vector<std::size_t> indeg(g.vertex_count());
  for (const auto& e : g.edges()) ++indeg[e.dst];
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::size_t removed = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    ++removed;
    for (std::size_t e : g.out_edges(v))
      if (--indeg[g.edge(e).dst] == 0) stack.push_back(g.edge(e).dst);
  }
  return removed != g.vertex_count();
}

bool condition_L(const Graph& g) {
  // A cycle without exits lives entirely inside the vertices of out-degree one,
  // where following the unique edge is a function; look for a cycle of it.
  const std::size_t n = g.vertex_count();
  std::vector<int> state(n, 0);  // 0 unseen, 1 on current walk, 2 finished
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    std::vector<std::size_t> walk;
    std::size_t v = start;
    while (true) {
      if (g.out_edges(v).size() != 1) break;
      if (state[v] == 1) return false;
      if (state[v] == 2) break;
      state[v] = 1;
      walk.push_back(v);
      v = g.edge(g.out_edges(v).front()).dst;
    }
    for (std::size_t w : walk) state[w] = 2;
    if (state[v] == 0) state[v] = 2;
  }
  return true;
}

std::vector<bool> hereditary_saturated_closure(const Graph& g, const std::vector<bool>& seed) {
  std::vector<bool> in = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (in[v]) {
        for (std::size_t e : g.out_edges(v)) {
          std::size_t w = g.edge(e).dst;
          if (!in[w]) in[w] = changed = true;
        }
      } else if (g.is_regular(v)) {
        const auto& out = g.out_edges(v);
        if (std::all_of(out.begin(), out.end(), [&](std::size_t e) { return in[g.edge(e).dst]; }))
          in[v] = changed = true;
      }
    }
  }
  return in;
}

bool is_simple(const Graph& g) {
  if (!condition_L(g)) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> seed(g.vertex_count(), false);
    seed[v] = true;
    auto closure = hereditary_saturated_closure(g, seed);
    if (std::find(closure.begin(), closure.end(), false) != closure.end()) return false;
  }
  return true;
}

bool is_purely_infinite_simple(const Graph& g) { return is_simple(g) && has_cycle(g); }

std::optional<BigInt> matrix_algebra_size(const Graph& g) {
  if (!is_simple(g) || has_cycle(g)) return std::nullopt;
  // Simple and acyclic forces a unique sink; count the paths ending there.
  const auto sinks = g.sinks();
  if (sinks.size() != 1) return std::nullopt;
  const std::size_t sink = sinks.front();
  std::vector<std::optional<BigInt>> memo(g.vertex_count());
  auto paths_from = [&](auto&& self, std::size_t v) -> BigInt {
    if (memo[v]) return *memo[v];
    BigInt n = v == sink ? 1 : 0;
    for (std::size_t e : g.out_edges(v)) n += self(self, g.edge(e).dst);
    memo[v] = n;
    return n;
  };
  BigInt total = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) total += paths_from(paths_from, v);
  return total;
}

Graph source_eliminate(const Graph& g) {
  std::vector<bool> alive(g.vertex_count(), true);
  std::vector<std::size_t> indeg(g.vertex_count());
  std::vector<std::size_t> outdeg(g.vertex_count());
  for (const auto& e : g.edges()) {
    ++indeg[e.dst];
    ++outdeg[e.src];
  }
  std::size_t remaining = g.vertex_count();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!alive[v] || indeg[v] != 0 || outdeg[v] == 0) continue;
      if (remaining == 1) throw InputError("source elimination would empty the vertex set");
      alive[v] = false;
      --remaining;
      for (std::size_t e : g.out_edges(v)) --indeg[g.edge(e).dst];
      changed = true;
      break;
    }
  }
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (alive[v]) vertices.push_back(g.vertex_name(v));
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges())
    if (alive[e.src]) edges.push_back({e.id, g.vertex_name(e.src), g.vertex_name(e.dst)});
  return Graph(std::move(vertices), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::unordered_set<std::string> taken(a.vertex_names().begin(), a.vertex_names().end());
  for (const auto& e : a.edges()) taken.insert(e.id);
  auto fresh = [&](std::string name) {
    while (taken.count(name)) name += "_b";
    taken.insert(name);
    return name;
  };
  std::vector<std::string> vertices = a.vertex_names();
  std::vector<std::string> renamed(b.vertex_count());
  for (std::size_t v = 0; v < b.vertex_count(); ++v) {
    renamed[v] = fresh(b.vertex_name(v));
    vertices.push_back(renamed[v]);
  }
  std::vector<EdgeSpec> edges = a.edge_specs();
  for (const auto& e : b.edges()) edges.push_back({fresh(e.id), renamed[e.src], renamed[e.dst]});
  return Graph(std::move(vertices), edges);
}

namespace graphs {
Graph rose(std::size_t loops, const std::string& vertex, const std::string& edge_prefix) {
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i <= loops; ++i)
    edges.push_back({edge_prefix + std::to_string(i), vertex, vertex});
  return Graph({vertex}, edges);
}
}  // namespace graphs

}  // namespace lpakit
