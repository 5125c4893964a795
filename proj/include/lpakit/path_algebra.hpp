#pragma once

#include "lpakit/graph.hpp"
#include "lpakit/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lpakit {

enum class AlgebraKind { Leavitt, Cohn };

/// A path of the graph; trivial (length 0) paths sit at a vertex.
struct Path {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  std::vector<std::uint32_t> edges;

  std::size_t length() const { return edges.size(); }
  bool trivial() const { return edges.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// The element alpha beta^* with r(alpha) = r(beta).
struct Monomial {
  Path alpha;
  Path beta;

  std::size_t length() const { return alpha.length() + beta.length(); }
  Monomial star() const { return {beta, alpha}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Order by total length, then |alpha|, then edge indices, then base vertices.
bool operator<(const Monomial& a, const Monomial& b);

/// L(E) or C(E) for a fixed graph. In L(E) the special edge of a regular
/// vertex is the first edge it emits (declaration order); normal forms avoid
/// monomials whose alpha and beta both end in the same special edge.
class PathAlgebra {
 public:
  PathAlgebra(std::shared_ptr<const Graph> graph, AlgebraKind kind);

  static std::shared_ptr<const PathAlgebra> create(const Graph& g, AlgebraKind kind);
  std::shared_ptr<const PathAlgebra> with_kind(AlgebraKind kind) const;

  const Graph& graph() const { return *graph_; }
  AlgebraKind kind() const { return kind_; }
  bool is_leavitt() const { return kind_ == AlgebraKind::Leavitt; }
  bool same_as(const PathAlgebra& other) const;

  /// Special edge of a regular vertex.
  std::optional<std::uint32_t> special_edge(std::size_t v) const;

  Path vertex_path(std::size_t v) const;
  Path edge_path(std::size_t e) const;
  Path concat(const Path& a, const Path& b) const;

  /// (alpha beta^*)(gamma delta^*) using only the path relations and CK1.
  std::optional<Monomial> multiply(const Monomial& a, const Monomial& b) const;

  /// Rewrites m into normal form; appends (monomial, sign) pairs.
  void reduce(const Monomial& m, int sign, std::vector<std::pair<Monomial, int>>& out) const;
  bool is_reduced(const Monomial& m) const;

  std::string path_string(const Path& p) const;
  std::string monomial_string(const Monomial& m) const;

 private:
  std::shared_ptr<const Graph> graph_;
  AlgebraKind kind_;
  std::vector<std::optional<std::uint32_t>> special_;
};

using Context = std::shared_ptr<const PathAlgebra>;

/// A finite linear combination of normal-form monomials.
template <typename S>
class Element {
 public:
  using Terms = std::map<Monomial, S>;

  explicit Element(Context ctx) : ctx_(std::move(ctx)) {}

  static Element scalar(const Context& ctx, const S& c) {
    Element out(ctx);
    if (c == S(0)) return out;
    for (std::size_t v = 0; v < ctx->graph().vertex_count(); ++v) out.terms_.emplace(vertex_monomial(*ctx, v), c);
    return out;
  }
  static Element unit(const Context& ctx) { return scalar(ctx, S(1)); }
  static Element vertex(const Context& ctx, std::size_t v) {
    return from_monomial(ctx, vertex_monomial(*ctx, v), S(1));
  }
  static Element edge(const Context& ctx, std::size_t e) {
    const Path p = ctx->edge_path(e);
    return from_monomial(ctx, {p, ctx->vertex_path(p.dst)}, S(1));
  }
  static Element ghost(const Context& ctx, std::size_t e) { return edge(ctx, e).star(); }

  static Element vertex(const Context& ctx, const std::string& name) {
    const auto v = ctx->graph().find_vertex(name);
    if (!v) throw InputError("unknown vertex id '" + name + "'");
    return vertex(ctx, *v);
  }
  static Element edge(const Context& ctx, const std::string& name) { return edge(ctx, edge_index(*ctx, name)); }
  static Element ghost(const Context& ctx, const std::string& name) { return ghost(ctx, edge_index(*ctx, name)); }

  /// Normalizes an arbitrary monomial combination (monomials must be composable).
  static Element from_monomial(const Context& ctx, const Monomial& m, const S& c) {
    Element out(ctx);
    out.add_reduced(m, c);
    return out;
  }
  static Element from_terms(const Context& ctx, const Terms& terms) {
    Element out(ctx);
    for (const auto& [m, c] : terms) out.add_reduced(m, c);
    return out;
  }

  const Context& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S(0) : it->second;
  }

  std::size_t max_length() const {
    std::size_t n = 0;
    for (const auto& kv : terms_) n = std::max(n, kv.first.length());
    return n;
  }

  /// Re-runs normalization; the identity on elements built through this API.
  Element normalized() const { return from_terms(ctx_, terms_); }

  Element star() const {
    Element out(ctx_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.star(), c);
    return out;
  }

  Element& operator+=(const Element& o) {
    check_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Element& operator*=(const S& c) {
    if (c == S(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second = kv.second * c;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= S(-1); }
  friend Element operator*(const S& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b) {
    a.check_context(b);
    Element out(a.ctx_);
    if (a.is_zero() || b.is_zero()) return out;
    std::vector<std::pair<Monomial, int>> reduced;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto m = a.ctx_->multiply(ma, mb);
        if (!m) continue;
        const S c = ca * cb;
        if (!a.ctx_->is_leavitt()) {
          out.add_term(*m, c);
          continue;
        }
        reduced.clear();
        a.ctx_->reduce(*m, 1, reduced);
        for (const auto& [r, sign] : reduced) out.add_term(r, sign > 0 ? c : S(-c));
      }
    return out;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.ctx_->same_as(*b.ctx_) && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string coef = ScalarTraits<S>::to_string(c);
      const bool negative = !coef.empty() && coef.front() == '-';
      if (negative) coef.erase(0, 1);
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (coef != "1") out += coef + "*";
      out += ctx_->monomial_string(m);
    }
    return out;
  }

 private:
  static Monomial vertex_monomial(const PathAlgebra& ctx, std::size_t v) {
    return {ctx.vertex_path(v), ctx.vertex_path(v)};
  }
  static std::size_t edge_index(const PathAlgebra& ctx, const std::string& name) {
    const auto e = ctx.graph().find_edge(name);
    if (!e) throw InputError("unknown edge id '" + name + "'");
    return *e;
  }

  void check_context(const Element& o) const {
    if (!ctx_->same_as(*o.ctx_)) throw InputError("algebra elements from different contexts");
  }

  void add_term(const Monomial& m, const S& c) {
    if (c == S(0)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second == S(0)) terms_.erase(it);
  }

  void add_reduced(const Monomial& m, const S& c) {
    if (!ctx_->is_leavitt()) {
      add_term(m, c);
      return;
    }
    std::vector<std::pair<Monomial, int>> reduced;
    ctx_->reduce(m, 1, reduced);
    for (const auto& [r, sign] : reduced) add_term(r, sign > 0 ? c : S(-c));
  }

  Context ctx_;
  Terms terms_;
};

/// Canonical surjection C(E) -> L(E).
template <typename S>
Element<S> quotient_to_leavitt(const Element<S>& a) {
  if (a.context()->is_leavitt()) throw InputError("quotient_to_leavitt expects a Cohn element");
  return Element<S>::from_terms(a.context()->with_kind(AlgebraKind::Leavitt), a.terms());
}

/// q_v = v - sum_{s(e)=v} e e^* for a regular vertex v.
template <typename S>
Element<S> gap_idempotent(const Context& ctx, std::size_t v) {
  Element<S> q = Element<S>::vertex(ctx, v);
  for (std::size_t e : ctx->graph().out_edges(v)) q -= Element<S>::edge(ctx, e) * Element<S>::ghost(ctx, e);
  return q;
}

/// The orthogonal idempotents e e^* (edges in order) followed by the sinks.
/// They span DL(E), and DL(E) is the product of copies of the field indexed by them.
template <typename S>
std::vector<Element<S>> diagonal_basis(const Context& ctx) {
  std::vector<Element<S>> out;
  for (std::size_t e = 0; e < ctx->graph().edge_count(); ++e)
    out.push_back(Element<S>::edge(ctx, e) * Element<S>::ghost(ctx, e));
  for (std::size_t v : ctx->graph().sinks()) out.push_back(Element<S>::vertex(ctx, v));
  return out;
}

namespace detail {
inline bool diagonal_monomial(const Monomial& m) {
  return m.alpha == m.beta && m.alpha.length() <= 1;
}
}  // namespace detail

/// Membership in DL(E) = span(sinks, e e^*). In normal form: only vertices and
/// e e^* for non-special e occur.
template <typename S>
bool is_in_DL(const Element<S>& a) {
  if (!a.context()->is_leavitt()) throw InputError("is_in_DL expects a Leavitt element");
  for (const auto& kv : a.terms())
    if (!detail::diagonal_monomial(kv.first)) return false;
  return true;
}

/// Membership in DC(E) = span(q_v, sinks, e e^*) = span(vertices, e e^*).
template <typename S>
bool is_in_DC(const Element<S>& a) {
  if (a.context()->is_leavitt()) throw InputError("is_in_DC expects a Cohn element");
  for (const auto& kv : a.terms())
    if (!detail::diagonal_monomial(kv.first)) return false;
  return true;
}

/// Coordinates of a DL element over diagonal_basis(); nullopt if not in DL.
template <typename S>
std::optional<std::vector<S>> dl_coordinates(const Element<S>& a) {
  if (!is_in_DL(a)) return std::nullopt;
  const PathAlgebra& ctx = *a.context();
  const Graph& g = ctx.graph();
  std::vector<S> c(g.edge_count() + g.sinks().size(), S(0));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto p = ctx.edge_path(e);
    const S vertex_coef = a.coefficient({ctx.vertex_path(p.src), ctx.vertex_path(p.src)});
    const S own = ctx.special_edge(p.src) == e ? S(0) : a.coefficient({p, p});
    c[e] = own + vertex_coef;
  }
  std::size_t k = g.edge_count();
  for (std::size_t v : g.sinks()) c[k++] = a.coefficient({ctx.vertex_path(v), ctx.vertex_path(v)});
  return c;
}

/// Sum of coordinates times the diagonal basis, in the given context.
template <typename S>
Element<S> from_dl_coordinates(const Context& ctx, const std::vector<S>& coords) {
  const auto basis = diagonal_basis<S>(ctx);
  Element<S> out(ctx);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!(coords[i] == S(0))) out += coords[i] * basis[i];
  return out;
}

}  // namespace lpakit
