#pragma once

#include "lpakit/lpa_matrix.hpp"

namespace lpakit {

/// An algebra map out of L(E), given by the images of vertices, edges and ghost edges.
template <typename S>
struct HomData {
  Context source;
  Context target;
  std::vector<Element<S>> vertex_images;
  std::vector<Element<S>> edge_images;
  std::vector<Element<S>> ghost_images;

  static HomData identity(const Context& ctx) {
    HomData h{ctx, ctx, {}, {}, {}};
    for (std::size_t v = 0; v < ctx->graph().vertex_count(); ++v) h.vertex_images.push_back(Element<S>::vertex(ctx, v));
    for (std::size_t e = 0; e < ctx->graph().edge_count(); ++e) {
      h.edge_images.push_back(Element<S>::edge(ctx, e));
      h.ghost_images.push_back(Element<S>::ghost(ctx, e));
    }
    return h;
  }
};

/// Extends the generator images multiplicatively and linearly over normal forms.
template <typename S>
Element<S> apply_hom(const HomData<S>& h, const Element<S>& a) {
  if (!a.context()->same_as(*h.source)) throw InputError("element does not belong to the source algebra");
  Element<S> out(h.target);
  for (const auto& [m, c] : a.terms()) {
    if (m.alpha.trivial() && m.beta.trivial()) {
      out += c * h.vertex_images[m.alpha.src];
      continue;
    }
    std::optional<Element<S>> value;
    auto times = [&](const Element<S>& x) { value = value ? *value * x : x; };
    for (std::uint32_t e : m.alpha.edges) times(h.edge_images[e]);
    for (std::size_t i = m.beta.edges.size(); i-- > 0;) times(h.ghost_images[m.beta.edges[i]]);
    out += c * *value;
  }
  return out;
}

template <typename S>
LpaMatrix<S> apply_hom(const HomData<S>& h, const LpaMatrix<S>& m) {
  return m.map(h.target, [&](const Element<S>& a) { return apply_hom(h, a); });
}

/// Checks the defining relations of L(E) on the images: orthogonal idempotent
/// vertices, s(e) e r(e) = e, CK1 and CK2.
template <typename S>
bool verify_homomorphism(const HomData<S>& h) {
  const Graph& g = h.source->graph();
  if (h.vertex_images.size() != g.vertex_count() || h.edge_images.size() != g.edge_count() ||
      h.ghost_images.size() != g.edge_count())
    return false;
  const Element<S> zero(h.target);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (std::size_t w = 0; w < g.vertex_count(); ++w)
      if (!(h.vertex_images[v] * h.vertex_images[w] == (v == w ? h.vertex_images[v] : zero))) return false;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& s = h.vertex_images[g.edge(e).src];
    const auto& r = h.vertex_images[g.edge(e).dst];
    const auto& x = h.edge_images[e];
    const auto& y = h.ghost_images[e];
    if (!(s * x == x) || !(x * r == x) || !(r * y == y) || !(y * s == y)) return false;
    for (std::size_t f = 0; f < g.edge_count(); ++f)
      if (!(y * h.edge_images[f] == (e == f ? r : zero))) return false;
  }
  for (std::size_t v : g.regular_vertices()) {
    Element<S> sum(h.target);
    for (std::size_t e : g.out_edges(v)) sum += h.edge_images[e] * h.ghost_images[e];
    if (!(sum == h.vertex_images[v])) return false;
  }
  return true;
}

/// Fixes vertices, e -> u e, e^* -> e^* u^{-1}. Throws unless u u_inv = u_inv u = 1.
template <typename S>
HomData<S> twisted_endomorphism(const Context& ctx, const Element<S>& u, const Element<S>& u_inv) {
  const auto one = Element<S>::unit(ctx);
  if (!(u * u_inv == one) || !(u_inv * u == one)) throw InputError("twisting element is not invertible with the given inverse");
  HomData<S> h = HomData<S>::identity(ctx);
  for (std::size_t e = 0; e < ctx->graph().edge_count(); ++e) {
    h.edge_images[e] = u * h.edge_images[e];
    h.ghost_images[e] = h.ghost_images[e] * u_inv;
  }
  return h;
}

/// lambda(a) = sum_e phi(e) a phi(e^*).
template <typename S>
Element<S> lambda_map(const HomData<S>& phi, const Element<S>& a) {
  Element<S> out(phi.target);
  for (std::size_t e = 0; e < phi.source->graph().edge_count(); ++e)
    out += phi.edge_images[e] * a * phi.ghost_images[e];
  return out;
}

/// x1 a y1 + x2 b y2, provided y_i x_j = delta_ij.
template <typename S>
Element<S> boxplus(const Element<S>& a, const Element<S>& b, const Element<S>& x1, const Element<S>& x2,
                   const Element<S>& y1, const Element<S>& y2) {
  const auto one = Element<S>::unit(a.context());
  const Element<S> zero(a.context());
  if (!(y1 * x1 == one) || !(y2 * x2 == one) || !(y1 * x2 == zero) || !(y2 * x1 == zero))
    throw InputError("boxplus needs y_i x_j = delta_ij");
  return x1 * a * y1 + x2 * b * y2;
}

}  // namespace lpakit
