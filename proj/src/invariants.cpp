#include "lpakit/invariants.hpp"

#include "lpakit/errors.hpp"
#include "lpakit/smith.hpp"

#include <algorithm>

namespace lpakit {

std::string Simplicity::name() const {
  switch (kind) {
    case Kind::NotSimple: return "NotSimple";
    case Kind::SimpleMatrix: return "SimpleMatrix";
    case Kind::PurelyInfiniteSimple: return "PurelyInfiniteSimple";
  }
  return "";
}

Simplicity simplicity_of(const Graph& g) {
  if (!is_simple(g)) return {};
  if (has_cycle(g)) return {Simplicity::Kind::PurelyInfiniteSimple, 0};
  return {Simplicity::Kind::SimpleMatrix, *matrix_algebra_size(g)};
}

LpaInvariants compute_invariants(const Graph& g) {
  LpaInvariants inv;
  const IntMatrix m = bk_matrix(g);
  const Cokernel coker = cokernel(m);
  inv.k0.group = coker.group;
  inv.k0.point = coker.project(IntVector::Constant(static_cast<Eigen::Index>(g.vertex_count()), BigInt(1)));
  inv.k0_projection = coker.projection;
  inv.kernel = kernel_basis(m);
  for (const auto& x : inv.kernel)
    if (!is_zero(IntVector(m * x))) throw VerificationError("kernel basis vector is not in ker(I - A_E^t)");
  inv.k1_free_rank = inv.kernel.size();
  inv.k1_twist = coker.group;
  inv.simplicity = simplicity_of(g);
  return inv;
}

std::string ClassificationVerdict::name() const {
  switch (kind) {
    case Kind::NotApplicable: return "NotApplicable";
    case Kind::MatrixCase: return "MatrixCase";
    case Kind::NotEquivalent: return "NotEquivalent";
    case Kind::M2HomotopyEquivalent: return "M2HomotopyEquivalent";
    case Kind::UnitalHomotopyEquivalent: return "UnitalHomotopyEquivalent";
    case Kind::Undecided: return "Undecided";
  }
  return "";
}

ClassificationVerdict classify(const Graph& e, const Graph& f, const PointedIsoOptions& options) {
  using Kind = ClassificationVerdict::Kind;
  ClassificationVerdict v;
  const auto se = simplicity_of(e);
  const auto sf = simplicity_of(f);
  if (se.kind == Simplicity::Kind::NotSimple || sf.kind == Simplicity::Kind::NotSimple) {
    v.kind = Kind::NotApplicable;
    v.reason = se.kind == Simplicity::Kind::NotSimple ? "L(E) is not simple" : "L(F) is not simple";
    return v;
  }
  const bool me = se.kind == Simplicity::Kind::SimpleMatrix;
  const bool mf = sf.kind == Simplicity::Kind::SimpleMatrix;
  if (me && mf) {
    v.kind = Kind::MatrixCase;
    v.n = se.matrix_size;
    v.m = sf.matrix_size;
    v.reason = v.n == v.m ? "both are M_" + v.n.str() : "M_" + v.n.str() + " and M_" + v.m.str() + " differ";
    return v;
  }
  if (me != mf) {
    // A purely infinite simple algebra admits no nonzero map into a matrix algebra.
    v.kind = Kind::NotEquivalent;
    v.reason = "one algebra is a matrix algebra and the other is purely infinite simple";
    return v;
  }

  const auto ie = compute_invariants(e);
  const auto jf = compute_invariants(f);
  if (!(ie.k0.group == jf.k0.group)) {
    v.kind = Kind::NotEquivalent;
    v.reason = "K_0 groups differ: " + ie.k0.group.to_string() + " vs " + jf.k0.group.to_string();
    v.pointed = pointed_isomorphic(ie.k0, jf.k0, options);
    return v;
  }
  const auto n = static_cast<Eigen::Index>(ie.k0.group.generator_count());
  v.witness = IntMatrix::Identity(n, n);
  v.pointed = pointed_isomorphic(ie.k0, jf.k0, options);
  switch (v.pointed->verdict) {
    case IsoVerdict::Yes:
      v.kind = Kind::UnitalHomotopyEquivalent;
      v.witness = v.pointed->witness;
      v.reason = "pointed K_0 isomorphism found";
      break;
    case IsoVerdict::No:
      v.kind = Kind::M2HomotopyEquivalent;
      v.reason = "K_0 groups agree but no isomorphism preserves the unit class";
      break;
    case IsoVerdict::Unknown:
      v.kind = Kind::Undecided;
      v.reason = "K_0 groups agree; unit class comparison undecided: " + v.pointed->certificate;
      break;
  }
  return v;
}

ExtReport ext_group(const Graph& e, const ExtTarget& target) {
  if (!is_simple(e)) throw InputError("ext requires is_simple(E), which fails");
  FgAbGroup k0r, km1r;
  if (std::holds_alternative<GroundField>(target)) {
    k0r = FgAbGroup::free(1);
  } else if (const auto* g = std::get_if<Graph>(&target)) {
    if (!is_purely_infinite_simple(*g))
      throw InputError("ext target requires is_purely_infinite_simple(F), which fails");
    k0r = cokernel(bk_matrix(*g)).group;
  } else {
    const auto& ring = std::get<AbstractRing>(target);
    k0r = ring.k0;
    km1r = ring.k_minus1;
  }
  const auto inv = compute_invariants(e);
  ExtReport r;
  r.sub = ext1(inv.k0.group, k0r);
  r.quotient = direct_sum(hom_group(FgAbGroup::free(inv.k1_free_rank), k0r), hom_group(inv.k0.group, km1r));
  if (r.sub.is_trivial()) {
    r.exact = true;
    r.group = r.quotient;
  } else if (r.quotient.is_trivial()) {
    r.exact = true;
    r.group = r.sub;
  }
  if (std::holds_alternative<GroundField>(target)) {
    r.cokernel_transpose = cokernel(bk_matrix_transpose(e)).group;
    // Over Z the sequence splits; the transpose cokernel must match both ends.
    if (!(*r.cokernel_transpose == direct_sum(r.sub, r.quotient)))
      throw VerificationError("Coker(I - A_E) disagrees with the Ext exact sequence");
    r.exact = true;
    r.group = r.cokernel_transpose;
  }
  return r;
}

namespace {

/// Weakly connected components as induced subgraphs.
std::vector<Graph> components(const Graph& g) {
  std::vector<std::size_t> label(g.vertex_count(), g.vertex_count());
  std::size_t count = 0;
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (label[root] != g.vertex_count()) continue;
    std::vector<std::size_t> stack{root};
    label[root] = count;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      auto visit = [&](std::size_t w) {
        if (label[w] == g.vertex_count()) {
          label[w] = count;
          stack.push_back(w);
        }
      };
      for (std::size_t e : g.out_edges(v)) visit(g.edge(e).dst);
      for (std::size_t e : g.in_edges(v)) visit(g.edge(e).src);
    }
    ++count;
  }
  std::vector<std::vector<std::string>> vertices(count);
  std::vector<std::vector<EdgeSpec>> edges(count);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) vertices[label[v]].push_back(g.vertex_name(v));
  for (const auto& e : g.edges()) edges[label[e.src]].push_back({e.id, g.vertex_name(e.src), g.vertex_name(e.dst)});
  std::vector<Graph> out;
  for (std::size_t c = 0; c < count; ++c) out.emplace_back(std::move(vertices[c]), edges[c]);
  return out;
}

}  // namespace

Graph canonical_representative(const Graph& g) {
  // Besides simple E, accept finite products of purely infinite simple
  // algebras, which is the shape of the representative itself.
  if (!is_simple(g)) {
    const auto parts = components(g);
    const bool product = parts.size() > 1 && std::all_of(parts.begin(), parts.end(), [](const Graph& c) {
      return is_purely_infinite_simple(c);
    });
    if (!product)
      throw InputError(
          "canonical representative requires is_simple(E) or purely infinite simple components, which fails");
  }
  const auto k0 = cokernel(bk_matrix(g)).group;
  if (!k0.is_finite()) throw InputError("canonical representative requires K_0(L(E)) finite, but it is " + k0.to_string());
  Graph out = graphs::rose(2);
  if (k0.torsion.size() == 1) {
    out = graphs::rose(k0.torsion[0].convert_to<std::size_t>() + 1);
  } else if (k0.torsion.size() > 1) {
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < k0.torsion.size(); ++i) {
      const std::string v = "v" + std::to_string(i + 1);
      vertices.push_back(v);
      const auto loops = k0.torsion[i].convert_to<std::size_t>() + 1;
      for (std::size_t j = 1; j <= loops; ++j)
        edges.push_back({"e" + std::to_string(i + 1) + "_" + std::to_string(j), v, v});
    }
    out = Graph(std::move(vertices), edges);
  }
  if (!(cokernel(bk_matrix(out)).group == k0))
    throw VerificationError("canonical representative has a different K_0");
  return out;
}

nlohmann::json to_json(const LpaInvariants& inv) {
  nlohmann::json kernel = nlohmann::json::array();
  for (const auto& x : inv.kernel) kernel.push_back(to_json(x));
  nlohmann::json simplicity = inv.simplicity.name();
  nlohmann::json j{{"k0", to_json(inv.k0)},
                   {"kernel_basis", kernel},
                   {"k1", {{"free_rank", inv.k1_free_rank},
                           {"twist", to_json(inv.k1_twist)},
                           {"text", "ker(I - A_E^t) + K_0 (x) l^*"}}},
                   {"simplicity", simplicity}};
  if (inv.simplicity.kind == Simplicity::Kind::SimpleMatrix) j["matrix_size"] = to_json(inv.simplicity.matrix_size);
  j["note"] = "K_0 is compared as a pointed group; the order adds nothing in the purely infinite simple case";
  return j;
}

nlohmann::json to_json(const ClassificationVerdict& v) {
  using Kind = ClassificationVerdict::Kind;
  nlohmann::json j{{"verdict", v.name()}, {"reason", v.reason}};
  if (v.kind == Kind::MatrixCase) {
    j["n"] = to_json(v.n);
    j["m"] = to_json(v.m);
    j["equivalent"] = v.n == v.m;
  }
  if (v.kind == Kind::M2HomotopyEquivalent || v.kind == Kind::UnitalHomotopyEquivalent ||
      v.kind == Kind::Undecided)
    j["witness"] = to_json(v.witness);
  if (v.pointed) j["pointed"] = to_json(*v.pointed);
  return j;
}

nlohmann::json to_json(const ExtReport& r) {
  nlohmann::json j{{"sub", to_json(r.sub)}, {"quotient", to_json(r.quotient)}, {"exact", r.exact}};
  if (r.group) j["group"] = to_json(*r.group);
  if (r.cokernel_transpose) j["cokernel_transpose"] = to_json(*r.cokernel_transpose);
  return j;
}

}  // namespace lpakit
