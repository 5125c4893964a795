#pragma once

#include "lpakit/abelian_group.hpp"
#include "lpakit/homomorphism.hpp"
#include "lpakit/lpa_matrix.hpp"
#include "lpakit/smith.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace lpakit {

/// y_e = x_{s(e)} on edges, 0 on sinks. Throws unless x lies in ker(I - A_E^t).
IntVector s_star(const Graph& g, const IntVector& x);

struct IndexPair {
  std::size_t edge;
  std::size_t j;  // 1-based copy number
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// {(e, j) : y_e != 0, 1 <= j <= |y_e|}, by edge order then j.
std::vector<IndexPair> index_set(const Graph& g, const IntVector& y);

/// One unit entry of W: at (row, col), carrying the basis idempotent `lambda`.
struct WPairing {
  std::size_t lambda;
  std::size_t row;
  std::size_t col;
};

struct UnitaryChecks {
  bool unitary = false;
  bool vw = false;
  bool w_in_dl = false;
  bool condition_w = false;
  bool all() const { return unitary && vw && w_in_dl && condition_w; }
};

template <typename Scalar>
struct UnitaryBundle {
  Context ctx;
  IntVector x;
  IntVector y;
  std::vector<IndexPair> S;
  LpaMatrix<Scalar> V, W, U;
  /// For each diagonal basis idempotent, the positions where p resp. q has coefficient 1.
  std::vector<std::vector<std::size_t>> p_support, q_support;
  /// W's bijections between the supports (ascending order), the recorded basis choice.
  std::vector<WPairing> pairings;
  std::optional<UnitaryChecks> checks;
};

namespace detail {

template <typename Scalar>
std::vector<std::vector<std::size_t>> zero_one_supports(const LpaMatrix<Scalar>& d, std::size_t basis_size,
                                                        const char* what) {
  std::vector<std::vector<std::size_t>> support(basis_size);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    const auto c = dl_coordinates(d(i, i));
    if (!c) throw VerificationError(std::string(what) + " has an entry outside DL(E)");
    for (std::size_t l = 0; l < basis_size; ++l) {
      if ((*c)[l] == Scalar(0)) continue;
      if (!((*c)[l] == Scalar(1))) throw VerificationError(std::string(what) + " is not a 0/1 combination of the diagonal basis");
      support[l].push_back(i);
    }
  }
  return support;
}

template <typename Scalar>
Element<Scalar> diagonal_entry(const Context& ctx, const IndexPair& s, const IntVector& y) {
  return y(static_cast<Eigen::Index>(s.edge)) > 0 ? Element<Scalar>::edge(ctx, s.edge) : Element<Scalar>::ghost(ctx, s.edge);
}

}  // namespace detail

template <typename Scalar = Rational>
LpaMatrix<Scalar> build_V(const Context& ctx, const IntVector& x) {
  const Graph& g = ctx->graph();
  const IntVector y = s_star(g, x);
  const auto S = index_set(g, y);
  if (S.empty()) throw InputError("V(x) needs a nonempty index set; x is zero");
  std::vector<Element<Scalar>> diag;
  for (const auto& s : S) diag.push_back(detail::diagonal_entry<Scalar>(ctx, s, y));
  return LpaMatrix<Scalar>::diagonal(ctx, diag);
}

/// V, W and U = V + W for a kernel vector x, with every relation checked
/// unless verify is false.
template <typename Scalar = Rational>
UnitaryBundle<Scalar> build_U(const Context& ctx, const IntVector& x, bool verify = true) {
  if (!ctx->is_leavitt()) throw InputError("U(x) is built in the Leavitt path algebra");
  const Graph& g = ctx->graph();
  UnitaryBundle<Scalar> b{ctx, x, s_star(g, x), {}, {ctx, 0, 0}, {ctx, 0, 0}, {ctx, 0, 0}, {}, {}, {}, {}};
  b.S = index_set(g, b.y);
  const std::size_t n = b.S.size();
  if (n == 0) {
    if (verify) b.checks = UnitaryChecks{true, true, true, true};
    return b;
  }
  b.V = build_V<Scalar>(ctx, x);
  const auto basis = diagonal_basis<Scalar>(ctx);
  const auto one = LpaMatrix<Scalar>::identity(ctx, n);
  const auto v_star = star_transpose(b.V);
  const auto p = mat_sub(one, mat_mul(b.V, v_star));
  const auto q = mat_sub(one, mat_mul(v_star, b.V));
  b.p_support = detail::zero_one_supports(p, basis.size(), "1 - VV^*");
  b.q_support = detail::zero_one_supports(q, basis.size(), "1 - V^*V");

  b.W = LpaMatrix<Scalar>(ctx, n, n);
  for (std::size_t l = 0; l < basis.size(); ++l) {
    const auto& rows = b.p_support[l];
    const auto& cols = b.q_support[l];
    if (rows.size() != cols.size())
      throw VerificationError("support-count mismatch for diagonal idempotent " + std::to_string(l) + ": " +
                              std::to_string(rows.size()) + " vs " + std::to_string(cols.size()) +
                              " (x is not in the kernel or the construction is faulty)");
    for (std::size_t k = 0; k < rows.size(); ++k) {
      b.pairings.push_back({l, rows[k], cols[k]});
      b.W(rows[k], cols[k]) += basis[l];
    }
  }
  b.U = mat_add(b.V, b.W);
  if (!verify) return b;

  UnitaryChecks c;
  const auto u_star = star_transpose(b.U);
  c.unitary = is_identity(mat_mul(b.U, u_star)) && is_identity(mat_mul(u_star, b.U));
  const auto w_star = star_transpose(b.W);
  c.vw = mat_mul(b.W, w_star) == p && mat_mul(w_star, b.W) == q && mat_mul(w_star, b.V).is_zero() &&
         mat_mul(v_star, b.W).is_zero();
  c.w_in_dl = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.w_in_dl = c.w_in_dl && is_in_DL(b.W(i, j));
  // Each W_lambda is a 0/1 bijection from the support of q_lambda onto that of p_lambda.
  c.condition_w = true;
  for (std::size_t l = 0; l < basis.size(); ++l) {
    std::vector<std::size_t> rows, cols;
    for (const auto& pr : b.pairings)
      if (pr.lambda == l) {
        rows.push_back(pr.row);
        cols.push_back(pr.col);
      }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    c.condition_w = c.condition_w && rows == b.p_support[l] && cols == b.q_support[l];
  }
  b.checks = c;
  if (!c.all()) throw VerificationError("U(x) failed verification");
  return b;
}

/// Coordinates of a Cohn element over the basis alpha q_v beta^* of the ideal
/// generated by the q_v; keys are (alpha, beta) with v = r(alpha). nullopt if
/// the element is not in that ideal.
template <typename Scalar>
std::optional<std::map<Monomial, Scalar>> q_ideal_coordinates(const Element<Scalar>& a) {
  if (a.context()->is_leavitt()) throw InputError("q-ideal coordinates are taken in the Cohn algebra");
  const Context& ctx = a.context();
  const Graph& g = ctx->graph();
  const std::size_t cap = a.max_length();
  std::map<Monomial, Scalar> out;
  Element<Scalar> rest = a;
  while (!rest.is_zero()) {
    // The shortest remaining term is the leading term of exactly one basis element.
    const Monomial m = rest.terms().begin()->first;
    const Scalar c = rest.terms().begin()->second;
    const std::size_t v = m.alpha.dst;
    if (!g.is_regular(v) || m.length() + 2 > cap) return std::nullopt;
    out.emplace(m, c);
    Element<Scalar> basis_element = Element<Scalar>::from_monomial(ctx, m, Scalar(1));
    for (std::size_t e : g.out_edges(v)) {
      const Path ep = ctx->edge_path(e);
      basis_element -= Element<Scalar>::from_monomial(ctx, {ctx->concat(m.alpha, ep), ctx->concat(m.beta, ep)}, Scalar(1));
    }
    rest -= c * basis_element;
  }
  return out;
}

/// Element sum over alpha q_v beta^* of the given coordinates.
template <typename Scalar>
Element<Scalar> from_q_ideal_coordinates(const Context& ctx, const std::map<Monomial, Scalar>& coords) {
  Element<Scalar> out(ctx);
  for (const auto& [m, c] : coords) {
    out += Element<Scalar>::from_monomial(ctx, m, c);
    for (std::size_t e : ctx->graph().out_edges(m.alpha.dst)) {
      const Path ep = ctx->edge_path(e);
      out -= Element<Scalar>::from_monomial(ctx, {ctx->concat(m.alpha, ep), ctx->concat(m.beta, ep)}, c);
    }
  }
  return out;
}

struct BoundaryChecks {
  bool partial_isometry = false;
  bool idempotent = false;
  bool in_q_ideal = false;
  bool vanish_in_leavitt = false;
  bool equals_minus_x = false;
  bool all() const { return partial_isometry && idempotent && in_q_ideal && vanish_in_leavitt && equals_minus_x; }
};

struct BoundaryReport {
  IntVector boundary;
  std::vector<long long> rank_d1, rank_d0;
  std::optional<BoundaryChecks> checks;
};

namespace detail {

struct BlockKey {
  std::size_t index;
  Path path;
  friend bool operator<(const BlockKey& a, const BlockKey& b) {
    return std::tie(a.index, a.path.src, a.path.edges) < std::tie(b.index, b.path.src, b.path.edges);
  }
};

/// Per-vertex ranks of a matrix whose entries lie in the q-ideal, read through
/// alpha q_v beta^* -> matrix unit (alpha, beta).
template <typename Scalar>
std::vector<long long> q_block_ranks(const LpaMatrix<Scalar>& d, const std::vector<std::size_t>& regular) {
  const Graph& g = d.context()->graph();
  std::vector<std::map<BlockKey, Eigen::Index>> rows(g.vertex_count()), cols(g.vertex_count());
  std::vector<std::vector<std::tuple<Eigen::Index, Eigen::Index, Scalar>>> entries(g.vertex_count());
  for (std::size_t s = 0; s < d.rows(); ++s)
    for (std::size_t t = 0; t < d.cols(); ++t) {
      if (d(s, t).is_zero()) continue;
      const auto coords = q_ideal_coordinates(d(s, t));
      if (!coords) throw VerificationError("a defect entry is outside the ideal generated by the q_v");
      for (const auto& [m, c] : *coords) {
        const std::size_t v = m.alpha.dst;
        auto r = rows[v].emplace(BlockKey{s, m.alpha}, static_cast<Eigen::Index>(rows[v].size())).first->second;
        auto k = cols[v].emplace(BlockKey{t, m.beta}, static_cast<Eigen::Index>(cols[v].size())).first->second;
        entries[v].emplace_back(r, k, c);
      }
    }
  std::vector<long long> ranks;
  for (std::size_t v : regular) {
    Matrix<Scalar> block = Matrix<Scalar>::Constant(static_cast<Eigen::Index>(rows[v].size()),
                                                    static_cast<Eigen::Index>(cols[v].size()), Scalar(0));
    for (const auto& [r, k, c] : entries[v]) block(r, k) += c;
    ranks.push_back(static_cast<long long>(exact_rank(block)));
  }
  return ranks;
}

}  // namespace detail

/// The boundary of [U(x)] computed in the Cohn algebra as
/// [1 - U^*U] - [1 - UU^*] in K_0 of the q-ideal = Z^reg(E). Should be -x.
template <typename Scalar = Rational>
BoundaryReport boundary_class(const UnitaryBundle<Scalar>& b, bool verify = true) {
  const Graph& g = b.ctx->graph();
  const auto regular = g.regular_vertices();
  BoundaryReport r;
  r.boundary = IntVector::Zero(static_cast<Eigen::Index>(regular.size()));
  const std::size_t n = b.S.size();
  if (n == 0) {
    r.rank_d0.assign(regular.size(), 0);
    r.rank_d1.assign(regular.size(), 0);
    if (verify) r.checks = BoundaryChecks{true, true, true, true, is_zero(b.x)};
    return r;
  }
  const Context cohn = b.ctx->with_kind(AlgebraKind::Cohn);
  const auto basis = diagonal_basis<Scalar>(cohn);
  std::vector<Element<Scalar>> diag;
  for (const auto& s : b.S) diag.push_back(detail::diagonal_entry<Scalar>(cohn, s, b.y));
  LpaMatrix<Scalar> u = LpaMatrix<Scalar>::diagonal(cohn, diag);
  for (const auto& pr : b.pairings) u(pr.row, pr.col) += basis[pr.lambda];
  const auto u_star = star_transpose(u);
  const auto one = LpaMatrix<Scalar>::identity(cohn, n);
  const auto d1 = mat_sub(one, mat_mul(u_star, u));
  const auto d0 = mat_sub(one, mat_mul(u, u_star));

  r.rank_d1 = detail::q_block_ranks(d1, regular);
  r.rank_d0 = detail::q_block_ranks(d0, regular);
  for (std::size_t i = 0; i < regular.size(); ++i)
    r.boundary(static_cast<Eigen::Index>(i)) = BigInt(r.rank_d1[i] - r.rank_d0[i]);
  if (!verify) return r;

  BoundaryChecks c;
  c.partial_isometry = mat_mul(mat_mul(u, u_star), u) == u;
  c.idempotent = mat_mul(d1, d1) == d1 && mat_mul(d0, d0) == d0;
  c.in_q_ideal = true;  // q_block_ranks throws otherwise
  const Context leavitt = b.ctx;
  auto to_l = [](const Element<Scalar>& a) { return quotient_to_leavitt(a); };
  c.vanish_in_leavitt = d1.map(leavitt, to_l).is_zero() && d0.map(leavitt, to_l).is_zero();
  c.equals_minus_x = r.boundary == IntVector(-b.x);
  r.checks = c;
  if (!c.all()) throw VerificationError("boundary identity failed to verify");
  return r;
}

template <typename Scalar = Rational>
BoundaryReport boundary_class(const Context& ctx, const IntVector& x, bool verify = true) {
  return boundary_class(build_U<Scalar>(ctx, x, verify), verify);
}

/// Formal sum of n_i [U(x_i)] over a chosen basis of ker(I - A_E^t).
template <typename Scalar>
struct K1Class {
  std::vector<IntVector> basis;
  std::vector<BigInt> coefficients;
  std::vector<std::pair<BigInt, UnitaryBundle<Scalar>>> terms;
};

/// Throws InputError unless `basis` is a Z-basis of ker(I - A_E^t).
void check_kernel_basis(const Graph& g, const std::vector<IntVector>& basis);

template <typename Scalar = Rational>
K1Class<Scalar> gamma(const Context& ctx, const std::vector<IntVector>& basis, const std::vector<BigInt>& coefficients,
                      bool verify = true) {
  check_kernel_basis(ctx->graph(), basis);
  if (coefficients.size() != basis.size()) throw InputError("gamma needs one coefficient per basis vector");
  K1Class<Scalar> k{basis, coefficients, {}};
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coefficients[i] != 0) k.terms.emplace_back(coefficients[i], build_U<Scalar>(ctx, basis[i], verify));
  return k;
}

namespace detail {

template <typename Scalar>
void check_aux_preconditions(const HomData<Scalar>& phi, const HomData<Scalar>& psi) {
  if (!phi.target->same_as(*psi.target) || !phi.source->same_as(*psi.source))
    throw InputError("phi and psi must share source and target");
  if (!is_purely_infinite_simple(phi.source->graph())) throw InputError("L(E) must be purely infinite simple");
  if (!verify_homomorphism(phi)) throw InputError("phi is not a homomorphism");
  if (!verify_homomorphism(psi)) throw InputError("psi is not a homomorphism");
  if (!(apply_hom(phi, Element<Scalar>::unit(phi.source)) == Element<Scalar>::unit(phi.target)))
    throw InputError("phi is not unital");
  for (const auto& l : diagonal_basis<Scalar>(phi.source))
    if (!(apply_hom(phi, l) == apply_hom(psi, l))) throw InputError("phi and psi disagree on DL(E)");
}

template <typename Scalar>
Element<Scalar> phi_range_projection(const HomData<Scalar>& phi, std::size_t e) {
  return phi.edge_images[e] * phi.ghost_images[e];
}

/// psi(e) phi(e^*) + 1 - phi(e e^*), and the inverse candidate phi(e) psi(e^*) + 1 - phi(e e^*).
template <typename Scalar>
std::pair<Element<Scalar>, Element<Scalar>> pairing_pair(const HomData<Scalar>& phi, const HomData<Scalar>& psi,
                                                         std::size_t e) {
  const auto one = Element<Scalar>::unit(phi.target);
  const auto proj = phi_range_projection(phi, e);
  return {psi.edge_images[e] * phi.ghost_images[e] + one - proj, phi.edge_images[e] * psi.ghost_images[e] + one - proj};
}

}  // namespace detail

template <typename Scalar>
struct AuxReport {
  Element<Scalar> u;
  Element<Scalar> u_inv;
  LpaMatrix<Scalar> P, Q;
  bool holds = false;
};

/// Checks psi(U(x)) = P phi(U(x)) Q, with u = sum_e psi(e) phi(e^*) verified
/// to be a unit of the commutant of phi(DL(E)).
template <typename Scalar = Rational>
AuxReport<Scalar> aux_identity_report(const HomData<Scalar>& phi, const HomData<Scalar>& psi, const IntVector& x) {
  detail::check_aux_preconditions(phi, psi);
  const Context& target = phi.target;
  const Graph& g = phi.source->graph();
  Element<Scalar> u(target), u_inv(target);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    u += psi.edge_images[e] * phi.ghost_images[e];
    u_inv += phi.edge_images[e] * psi.ghost_images[e];
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto proj = detail::phi_range_projection(phi, e);
    if (!(proj * u == u * proj)) throw InputError("u does not commute with phi(ee^*)");
  }
  const auto one = Element<Scalar>::unit(target);
  if (!(u * u_inv == one) || !(u_inv * u == one)) throw InputError("u is not invertible in R_phi");

  const auto bundle = build_U<Scalar>(phi.source, x);
  std::vector<Element<Scalar>> pd, qd;
  for (const auto& s : bundle.S) {
    const auto [w, w_inv] = detail::pairing_pair(phi, psi, s.edge);
    const bool positive = bundle.y(static_cast<Eigen::Index>(s.edge)) > 0;
    pd.push_back(positive ? w : one);
    qd.push_back(positive ? one : w_inv);
  }
  AuxReport<Scalar> r{u, u_inv, LpaMatrix<Scalar>::diagonal(target, pd), LpaMatrix<Scalar>::diagonal(target, qd), false};
  if (bundle.S.empty()) {
    r.holds = true;
    return r;
  }
  r.holds = apply_hom(psi, bundle.U) == mat_mul(mat_mul(r.P, apply_hom(phi, bundle.U)), r.Q);
  return r;
}

template <typename Scalar = Rational>
bool verify_aux_identity(const HomData<Scalar>& phi, const HomData<Scalar>& psi, const IntVector& x) {
  return aux_identity_report(phi, psi, x).holds;
}

/// psi(e) phi(e^*) + 1 - phi(e e^*); its inverse phi(e) psi(e^*) + 1 - phi(e e^*) is checked.
template <typename Scalar = Rational>
Element<Scalar> pairing_element(const HomData<Scalar>& phi, const HomData<Scalar>& psi, const std::string& edge) {
  detail::check_aux_preconditions(phi, psi);
  const auto e = phi.source->graph().find_edge(edge);
  if (!e) throw InputError("unknown edge id '" + edge + "'");
  const auto [w, w_inv] = detail::pairing_pair(phi, psi, *e);
  const auto one = Element<Scalar>::unit(phi.target);
  if (!(w * w_inv == one) || !(w_inv * w == one)) throw VerificationError("pairing element is not invertible");
  return w;
}

nlohmann::json to_json(const BoundaryReport& r);

/// "e*e^*" for edges, the vertex id for sinks, following diagonal_basis order.
std::string diagonal_basis_label(const Graph& g, std::size_t lambda);

template <typename Scalar>
nlohmann::json to_json(const UnitaryBundle<Scalar>& b) {
  const Graph& g = b.ctx->graph();
  nlohmann::json s = nlohmann::json::array();
  for (const auto& p : b.S) s.push_back({g.edge(p.edge).id, p.j});
  nlohmann::json pairings = nlohmann::json::array();
  for (const auto& p : b.pairings) pairings.push_back({{"idempotent", diagonal_basis_label(g, p.lambda)}, {"row", p.row}, {"col", p.col}});
  nlohmann::json j{{"x", to_json(b.x)}, {"y", to_json(b.y)}, {"index_set", s},
                   {"V", to_json(b.V)}, {"W", to_json(b.W)}, {"U", to_json(b.U)},
                   {"basis_choice", pairings}};
  if (b.checks)
    j["checks"] = {{"unitary", b.checks->unitary}, {"vw", b.checks->vw}, {"w_in_dl", b.checks->w_in_dl},
                   {"condition_w", b.checks->condition_w}};
  return j;
}

}  // namespace lpakit
