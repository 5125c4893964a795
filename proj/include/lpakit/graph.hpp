#pragma once

#include "lpakit/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lpakit {

struct Edge {
  std::string id;
  std::size_t src;
  std::size_t dst;
};

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;
};

/// Finite directed multigraph. Vertices and edges are addressed by their
/// declaration index; every matrix and vector indexed by vertices or edges
/// follows that order.
class Graph {
 public:
  /// Throws InputError on empty vertex set, duplicate ids or dangling edges.
  Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(std::size_t v) const { return vertices_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_edge(const std::string& name) const;

  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

  bool is_sink(std::size_t v) const { return out_[v].empty(); }
  bool is_regular(std::size_t v) const { return !out_[v].empty(); }
  bool is_source(std::size_t v) const { return in_[v].empty(); }

  /// Regular vertices in declaration order.
  std::vector<std::size_t> regular_vertices() const;
  std::vector<std::size_t> sinks() const;

  std::vector<EdgeSpec> edge_specs() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

struct VertexClassification {
  std::vector<std::size_t> regular;
  std::vector<std::size_t> sinks;
  std::vector<std::size_t> sources;
};

VertexClassification classify_vertices(const Graph& g);

/// A_E: rows indexed by regular vertices, columns by all vertices.
IntMatrix incidence_matrix(const Graph& g);

/// I - A_E^t, shape E^0 x reg(E). Its cokernel is K_0(L(E)).
IntMatrix bk_matrix(const Graph& g);

/// I - A_E, shape reg(E) x E^0.
IntMatrix bk_matrix_transpose(const Graph& g);

bool has_cycle(const Graph& g);
bool condition_L(const Graph& g);

/// Smallest hereditary saturated vertex set containing `seed`.
std::vector<bool> hereditary_saturated_closure(const Graph& g, const std::vector<bool>& seed);

bool is_simple(const Graph& g);
bool is_purely_infinite_simple(const Graph& g);

/// n with L(E) = M_n when L(E) is simple and E is acyclic.
std::optional<BigInt> matrix_algebra_size(const Graph& g);

/// Deletes non-isolated sources (and their edges) until none remain.
Graph source_eliminate(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

namespace graphs {
/// One vertex `v` with loops e1..en.
Graph rose(std::size_t loops, const std::string& vertex = "v", const std::string& edge_prefix = "e");
}  // namespace graphs

}  // namespace lpakit
