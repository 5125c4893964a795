#pragma once

#include "lpakit/graph.hpp"
#include "lpakit/path_algebra.hpp"
#include "lpakit/smith.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace lpakit::testing {

inline Graph loop1() { return Graph({"v"}, {{"e", "v", "v"}}); }

inline Graph line3() { return Graph({"v1", "v2", "v3"}, {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}}); }

inline Graph e34() {
  return Graph({"u", "v"},
               {{"f", "u", "v"}, {"e1", "v", "v"}, {"e2", "v", "v"}, {"e3", "v", "v"}, {"e4", "v", "v"}});
}

inline Graph k2() {
  return Graph({"v", "w"}, {{"a1", "v", "v"},
                            {"a2", "v", "v"},
                            {"b", "v", "w"},
                            {"c", "w", "v"},
                            {"d1", "w", "w"},
                            {"d2", "w", "w"}});
}

/// Adjacency I + J on three vertices: two loops at each vertex, one edge to each other vertex.
inline Graph k3() {
  const std::vector<std::string> vs{"x", "y", "z"};
  std::vector<EdgeSpec> edges;
  for (const auto& s : vs) {
    edges.push_back({s + "1", s, s});
    edges.push_back({s + "2", s, s});
    for (const auto& t : vs)
      if (s != t) edges.push_back({s + t, s, t});
  }
  return Graph(vs, edges);
}

/// Two regular vertices feeding a sink.
inline Graph with_sink() {
  return Graph({"u", "v", "w"}, {{"u1", "u", "u"},
                                 {"u2", "u", "u"},
                                 {"uv", "u", "v"},
                                 {"uw", "u", "w"},
                                 {"v1", "v", "v"},
                                 {"v2", "v", "v"},
                                 {"vu", "v", "u"},
                                 {"vw", "v", "w"}});
}

/// Adjacency [[2, 1], [2, 3]]; the kernel is spanned by (2, -1).
inline Graph k2_skew() {
  return Graph({"v", "w"}, {{"a1", "v", "v"},
                            {"a2", "v", "v"},
                            {"b", "v", "w"},
                            {"c1", "w", "v"},
                            {"c2", "w", "v"},
                            {"d1", "w", "w"},
                            {"d2", "w", "w"},
                            {"d3", "w", "w"}});
}

inline Graph two_cycle() { return Graph({"v", "w"}, {{"a", "v", "w"}, {"b", "w", "v"}}); }

inline Graph toeplitz() { return Graph({"v", "w"}, {{"a", "v", "v"}, {"b", "v", "w"}, {"c", "w", "w"}}); }

/// Graphs with nontrivial ker(I - A_E^t).
inline std::vector<std::pair<std::string, Graph>> kernel_corpus() {
  return {{"loop1", loop1()},         {"K2", k2()},
          {"K3", k3()},               {"K2_skew", k2_skew()},
          {"with_sink", with_sink()},
          {"two_cycle", two_cycle()}, {"toeplitz", toeplitz()},
          {"K2+loop1", disjoint_union(k2(), loop1())}};
}

/// Everything, including graphs with trivial kernel and a sink-only vertex.
inline std::vector<std::pair<std::string, Graph>> full_corpus() {
  auto out = kernel_corpus();
  out.emplace_back("R2", graphs::rose(2));
  out.emplace_back("R3", graphs::rose(3));
  out.emplace_back("R4", graphs::rose(4));
  out.emplace_back("E34", e34());
  out.emplace_back("line3", line3());
  out.emplace_back("point", Graph({"p"}, {}));
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices = 4, std::size_t max_edges = 8) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<EdgeSpec> edges;
  for (std::size_t k = 0; k < m; ++k) edges.push_back({"e" + std::to_string(k), vs[pick(rng)], vs[pick(rng)]});
  return Graph(vs, edges);
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  int n = 0;
  while (n == 0) n = num(rng);
  return Rational(n, den(rng));
}

/// Path of length <= max_len ending at `end`, built by walking edges backwards.
inline Path random_path_into(const PathAlgebra& ctx, std::size_t end, std::size_t max_len, std::mt19937_64& rng) {
  const Graph& g = ctx.graph();
  Path p = ctx.vertex_path(end);
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  for (std::size_t i = 0; i < len; ++i) {
    const auto& in = g.in_edges(p.src);
    if (in.empty()) break;
    const std::size_t e = in[std::uniform_int_distribution<std::size_t>(0, in.size() - 1)(rng)];
    p = ctx.concat(ctx.edge_path(e), p);
  }
  return p;
}

/// A composable monomial alpha beta^*, not necessarily in normal form.
inline Monomial random_monomial(const PathAlgebra& ctx, std::size_t max_len, std::mt19937_64& rng) {
  const std::size_t v = std::uniform_int_distribution<std::size_t>(0, ctx.graph().vertex_count() - 1)(rng);
  return {random_path_into(ctx, v, max_len, rng), random_path_into(ctx, v, max_len, rng)};
}

template <typename S = Rational>
Element<S> random_element(const Context& ctx, std::mt19937_64& rng, std::size_t max_terms = 5,
                          std::size_t max_len = 3) {
  typename Element<S>::Terms raw;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_terms)(rng);
  for (std::size_t i = 0; i < n; ++i)
    raw[random_monomial(*ctx, max_len, rng)] = ScalarTraits<S>::from_rational(random_rational(rng));
  return Element<S>::from_terms(ctx, raw);
}

/// Random element whose monomials can be multiplied on the left by those of
/// `left`: each alpha is a prefix or a forward extension of some beta of `left`.
template <typename S = Rational>
Element<S> random_element_after(const Element<S>& left, std::mt19937_64& rng, std::size_t max_terms = 5,
                                std::size_t max_len = 3) {
  const Context& ctx = left.context();
  if (left.is_zero()) return random_element<S>(ctx, rng, max_terms, max_len);
  const Graph& g = ctx->graph();
  std::vector<Path> betas;
  for (const auto& [m, c] : left.terms()) betas.push_back(m.beta);
  typename Element<S>::Terms raw;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const Path& beta = betas[std::uniform_int_distribution<std::size_t>(0, betas.size() - 1)(rng)];
    const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, beta.length())(rng);
    Path alpha = ctx->vertex_path(beta.src);
    for (std::size_t k = 0; k < cut; ++k) alpha = ctx->concat(alpha, ctx->edge_path(beta.edges[k]));
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    for (std::size_t k = 0; k < extra && alpha.length() < max_len; ++k) {
      const auto& out = g.out_edges(alpha.dst);
      if (out.empty()) break;
      alpha = ctx->concat(alpha, ctx->edge_path(out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)]));
    }
    raw[{alpha, random_path_into(*ctx, alpha.dst, max_len, rng)}] = ScalarTraits<S>::from_rational(random_rational(rng));
  }
  return Element<S>::from_terms(ctx, raw);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = BigInt(entry(rng));
  return m;
}

inline bool unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (const auto& d : invariant_factors(m))
    if (d != 1) return false;
  return true;
}

/// Isomorphic copy with fresh names and shuffled vertex and edge declaration order.
inline Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(g.vertex_count());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> vertex_ids;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) vertex_ids.push_back("n" + std::to_string(perm[v]));
  std::vector<std::size_t> order(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::string> shuffled;
  for (std::size_t i : order) shuffled.push_back(vertex_ids[i]);
  std::vector<EdgeSpec> edges;
  std::vector<std::size_t> eorder(g.edge_count());
  for (std::size_t i = 0; i < eorder.size(); ++i) eorder[i] = i;
  std::shuffle(eorder.begin(), eorder.end(), rng);
  for (std::size_t k = 0; k < eorder.size(); ++k) {
    const auto& e = g.edge(eorder[k]);
    edges.push_back({"f" + std::to_string(k), vertex_ids[e.src], vertex_ids[e.dst]});
  }
  return Graph(shuffled, edges);
}

}  // namespace lpakit::testing
