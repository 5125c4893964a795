#pragma once

#include "lpakit/abelian_group.hpp"
#include "lpakit/graph.hpp"
#include "lpakit/pointed_iso.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lpakit {

struct Simplicity {
  enum class Kind { NotSimple, SimpleMatrix, PurelyInfiniteSimple };
  Kind kind = Kind::NotSimple;
  /// L(E) = M_n in the SimpleMatrix case.
  BigInt matrix_size = 0;

  std::string name() const;
};

Simplicity simplicity_of(const Graph& g);

struct LpaInvariants {
  /// Coker(I - A_E^t) with the class of the unit.
  PointedAbGroup k0;
  /// Projection Z^{E^0} -> K_0 used for the unit class.
  IntMatrix k0_projection;
  /// Z-basis of ker(I - A_E^t) in Z^reg(E).
  std::vector<IntVector> kernel;
  std::size_t k1_free_rank = 0;
  /// K_1 = ker(I - A_E^t) + K_0 (x) l^*; this is the K_0 factor.
  FgAbGroup k1_twist;
  Simplicity simplicity;
};

LpaInvariants compute_invariants(const Graph& g);

struct ClassificationVerdict {
  enum class Kind {
    NotApplicable,
    MatrixCase,
    NotEquivalent,
    M2HomotopyEquivalent,
    UnitalHomotopyEquivalent,
    Undecided
  };
  Kind kind = Kind::Undecided;
  std::string reason;
  /// MatrixCase sizes.
  BigInt n = 0, m = 0;
  /// Group isomorphism K_0(L(E)) -> K_0(L(F)) in shared invariant-factor
  /// coordinates; pointed when the verdict is unital.
  IntMatrix witness;
  /// Outcome of the unit-class comparison, when K_0 was compared.
  std::optional<PointedIsoResult> pointed;

  std::string name() const;
  bool matrix_equal() const { return kind == Kind::MatrixCase && n == m; }
};

ClassificationVerdict classify(const Graph& e, const Graph& f, const PointedIsoOptions& options = {});

struct GroundField {};
struct AbstractRing {
  FgAbGroup k0;
  FgAbGroup k_minus1;
};
using ExtTarget = std::variant<GroundField, Graph, AbstractRing>;

struct ExtReport {
  /// Ext^1_Z(K_0(L(E)), K_0(R)).
  FgAbGroup sub;
  /// Hom(ker(I - A_E^t), K_0 R) + Hom(K_0(L(E)), K_{-1} R).
  FgAbGroup quotient;
  /// Set when the extension is forced: one of the end terms vanishes.
  bool exact = false;
  std::optional<FgAbGroup> group;
  /// Ground-field target only: Coker(I - A_E).
  std::optional<FgAbGroup> cokernel_transpose;
};

/// Throws InputError if E is not simple or a graph target is not purely infinite simple.
ExtReport ext_group(const Graph& e, const ExtTarget& target);

/// Disjoint union of roses R_{d+1}, one per invariant factor d of a finite K_0.
Graph canonical_representative(const Graph& g);

nlohmann::json to_json(const LpaInvariants& inv);
nlohmann::json to_json(const ClassificationVerdict& v);
nlohmann::json to_json(const ExtReport& r);

}  // namespace lpakit
