#include "lpakit/path_algebra.hpp"

#include <tuple>

namespace lpakit {

namespace {

bool is_prefix(const Path& p, const Path& q) {
  if (p.src != q.src || p.length() > q.length()) return false;
  return std::equal(p.edges.begin(), p.edges.end(), q.edges.begin());
}

Path drop_prefix(const Path& q, std::size_t n, std::uint32_t base) {
  Path out;
  out.edges.assign(q.edges.begin() + static_cast<std::ptrdiff_t>(n), q.edges.end());
  out.src = base;
  out.dst = q.dst;
  return out;
}

}  // namespace

bool operator<(const Monomial& a, const Monomial& b) {
  const std::size_t la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  if (a.alpha.length() != b.alpha.length()) return a.alpha.length() < b.alpha.length();
  return std::tie(a.alpha.edges, a.beta.edges, a.alpha.src, a.beta.src) <
         std::tie(b.alpha.edges, b.beta.edges, b.alpha.src, b.beta.src);
}

PathAlgebra::PathAlgebra(std::shared_ptr<const Graph> graph, AlgebraKind kind)
    : graph_(std::move(graph)), kind_(kind), special_(graph_->vertex_count()) {
  for (std::size_t v = 0; v < graph_->vertex_count(); ++v)
    if (graph_->is_regular(v)) special_[v] = static_cast<std::uint32_t>(graph_->out_edges(v).front());
}

std::shared_ptr<const PathAlgebra> PathAlgebra::create(const Graph& g, AlgebraKind kind) {
  return std::make_shared<const PathAlgebra>(std::make_shared<const Graph>(g), kind);
}

std::shared_ptr<const PathAlgebra> PathAlgebra::with_kind(AlgebraKind kind) const {
  return std::make_shared<const PathAlgebra>(graph_, kind);
}

bool PathAlgebra::same_as(const PathAlgebra& other) const {
  if (this == &other) return true;
  return kind_ == other.kind_ && (graph_ == other.graph_ || *graph_ == *other.graph_);
}

std::optional<std::uint32_t> PathAlgebra::special_edge(std::size_t v) const { return special_[v]; }

Path PathAlgebra::vertex_path(std::size_t v) const {
  const auto u = static_cast<std::uint32_t>(v);
  return {u, u, {}};
}

Path PathAlgebra::edge_path(std::size_t e) const {
  const auto& edge = graph_->edge(e);
  return {static_cast<std::uint32_t>(edge.src), static_cast<std::uint32_t>(edge.dst),
          {static_cast<std::uint32_t>(e)}};
}

Path PathAlgebra::concat(const Path& a, const Path& b) const {
  Path out{a.src, b.dst, a.edges};
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

std::optional<Monomial> PathAlgebra::multiply(const Monomial& a, const Monomial& b) const {
  // beta^* gamma is gamma' when gamma = beta gamma', (beta')^* when beta = gamma beta', else 0.
  const Path& beta = a.beta;
  const Path& gamma = b.alpha;
  if (is_prefix(beta, gamma)) {
    const Path rest = drop_prefix(gamma, beta.length(), beta.dst);
    return Monomial{concat(a.alpha, rest), b.beta};
  }
  if (is_prefix(gamma, beta)) {
    const Path rest = drop_prefix(beta, gamma.length(), gamma.dst);
    return Monomial{a.alpha, concat(b.beta, rest)};
  }
  return std::nullopt;
}

bool PathAlgebra::is_reduced(const Monomial& m) const {
  if (kind_ != AlgebraKind::Leavitt || m.alpha.trivial() || m.beta.trivial()) return true;
  const std::uint32_t e = m.alpha.edges.back();
  return e != m.beta.edges.back() || special_[graph_->edge(e).src] != e;
}

void PathAlgebra::reduce(const Monomial& m, int sign, std::vector<std::pair<Monomial, int>>& out) const {
  if (is_reduced(m)) {
    out.emplace_back(m, sign);
    return;
  }
  // alpha' g g^* beta'^* = alpha' beta'^* - sum_{f != g} alpha' f f^* beta'^*.
  const std::uint32_t g = m.alpha.edges.back();
  const std::uint32_t v = static_cast<std::uint32_t>(graph_->edge(g).src);
  Monomial shorter = m;
  shorter.alpha.edges.pop_back();
  shorter.beta.edges.pop_back();
  shorter.alpha.dst = shorter.beta.dst = v;
  for (std::size_t f : graph_->out_edges(v)) {
    if (f == g) continue;
    Monomial side = shorter;
    side.alpha.edges.push_back(static_cast<std::uint32_t>(f));
    side.beta.edges.push_back(static_cast<std::uint32_t>(f));
    side.alpha.dst = side.beta.dst = static_cast<std::uint32_t>(graph_->edge(f).dst);
    out.emplace_back(std::move(side), -sign);
  }
  reduce(shorter, sign, out);
}

std::string PathAlgebra::path_string(const Path& p) const {
  if (p.trivial()) return graph_->vertex_name(p.src);
  std::string s;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) s += "*";
    s += graph_->edge(p.edges[i]).id;
  }
  return s;
}

std::string PathAlgebra::monomial_string(const Monomial& m) const {
  if (m.beta.trivial()) return path_string(m.alpha);
  std::string s = m.alpha.trivial() ? "" : path_string(m.alpha) + "*";
  for (std::size_t i = m.beta.edges.size(); i-- > 0;) {
    s += graph_->edge(m.beta.edges[i]).id + "^*";
    if (i) s += "*";
  }
  return s;
}

}  // namespace lpakit
