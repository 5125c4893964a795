#pragma once

#include "lpakit/numeric.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lpakit {

/// Z^rank + Z/d_1 + ... + Z/d_k in invariant-factor form: d_i >= 2, d_i | d_{i+1}.
///
/// Elements are coordinate vectors of length k + rank, torsion coordinates
/// first (reduced into [0, d_i)), then the free coordinates.
struct FgAbGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  /// Normalizes an arbitrary list of cyclic orders (0 meaning Z, 1 dropped).
  static FgAbGroup from_cyclic_orders(const std::vector<BigInt>& orders);
  static FgAbGroup free(std::size_t rank) { return {rank, {}}; }
  static FgAbGroup cyclic(const BigInt& n) { return from_cyclic_orders({n}); }

  std::size_t torsion_count() const { return torsion.size(); }
  std::size_t generator_count() const { return torsion.size() + rank; }
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool is_finite() const { return rank == 0; }
  /// Order of the torsion subgroup (the whole group when finite).
  BigInt torsion_order() const;

  /// Reduces torsion coordinates into [0, d_i).
  IntVector reduce(const IntVector& x) const;
  /// 0 for elements of infinite order.
  BigInt element_order(const IntVector& x) const;

  std::string to_string() const;
  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
};

struct PointedAbGroup {
  FgAbGroup group;
  IntVector point;
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// H / nH.
FgAbGroup quotient_by_multiple(const FgAbGroup& h, const BigInt& n);

/// Ext^1_Z(G, H) = sum over torsion factors d of G of H/dH.
FgAbGroup ext1(const FgAbGroup& g, const FgAbGroup& h);

/// Hom_Z(G, H) = H^rank(G) + sum over torsion pairs (d, e) of Z/gcd(d, e).
FgAbGroup hom_group(const FgAbGroup& g, const FgAbGroup& h);

/// Z^rows / (column span of M), with the coordinate projection.
struct Cokernel {
  FgAbGroup group;
  /// generator_count x rows: rows of the left Smith transform that survive.
  IntMatrix projection;

  IntVector project(const IntVector& x) const { return group.reduce(projection * x); }
};

Cokernel cokernel(const IntMatrix& m);

nlohmann::json to_json(const BigInt& n);
nlohmann::json to_json(const IntVector& v);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const FgAbGroup& g);
nlohmann::json to_json(const PointedAbGroup& p);

}  // namespace lpakit
