#include "lpakit/unitary.hpp"

namespace lpakit {

IntVector s_star(const Graph& g, const IntVector& x) {
  const auto reg = g.regular_vertices();
  if (static_cast<std::size_t>(x.size()) != reg.size())
    throw InputError("kernel vector has " + std::to_string(x.size()) + " entries but the graph has " +
                     std::to_string(reg.size()) + " regular vertices");
  if (!is_zero(IntVector(bk_matrix(g) * x))) throw InputError("x is not in ker(I - A_E^t)");
  std::vector<BigInt> at_vertex(g.vertex_count(), BigInt(0));
  for (std::size_t i = 0; i < reg.size(); ++i) at_vertex[reg[i]] = x(static_cast<Eigen::Index>(i));
  IntVector y = IntVector::Zero(static_cast<Eigen::Index>(g.edge_count() + g.sinks().size()));
  for (std::size_t e = 0; e < g.edge_count(); ++e) y(static_cast<Eigen::Index>(e)) = at_vertex[g.edge(e).src];
  return y;
}

std::vector<IndexPair> index_set(const Graph& g, const IntVector& y) {
  std::vector<IndexPair> s;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto n = abs(y(static_cast<Eigen::Index>(e))).convert_to<std::size_t>();
    for (std::size_t j = 1; j <= n; ++j) s.push_back({e, j});
  }
  return s;
}

void check_kernel_basis(const Graph& g, const std::vector<IntVector>& basis) {
  const IntMatrix m = bk_matrix(g);
  const auto reference = kernel_basis(m);
  if (basis.size() != reference.size())
    throw InputError("basis has " + std::to_string(basis.size()) + " vectors but the kernel has rank " +
                     std::to_string(reference.size()));
  if (basis.empty()) return;
  IntMatrix b(m.cols(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != m.cols()) throw InputError("basis vector has the wrong length");
    if (!is_zero(IntVector(m * basis[i]))) throw InputError("basis vector is not in ker(I - A_E^t)");
    b.col(static_cast<Eigen::Index>(i)) = basis[i];
  }
  // The kernel is saturated, so independent vectors with unit invariant factors span it.
  for (const auto& d : invariant_factors(b))
    if (d != 1) throw InputError("vectors do not form a Z-basis of ker(I - A_E^t)");
}

std::string diagonal_basis_label(const Graph& g, std::size_t lambda) {
  if (lambda < g.edge_count()) return g.edge(lambda).id + "*" + g.edge(lambda).id + "^*";
  return g.vertex_name(g.sinks().at(lambda - g.edge_count()));
}

nlohmann::json to_json(const BoundaryReport& r) {
  nlohmann::json j{{"boundary", to_json(r.boundary)}, {"rank_d1", r.rank_d1}, {"rank_d0", r.rank_d0}};
  if (r.checks)
    j["checks"] = {{"partial_isometry", r.checks->partial_isometry},
                   {"idempotent", r.checks->idempotent},
                   {"in_q_ideal", r.checks->in_q_ideal},
                   {"vanish_in_leavitt", r.checks->vanish_in_leavitt},
                   {"equals_minus_x", r.checks->equals_minus_x}};
  return j;
}

}  // namespace lpakit
