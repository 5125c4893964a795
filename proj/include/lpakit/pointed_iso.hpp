#pragma once

#include "lpakit/abelian_group.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace lpakit {

enum class IsoVerdict { Yes, No, Unknown };

struct PointedIsoOptions {
  /// Largest torsion subgroup whose automorphism orbits are enumerated.
  std::uint64_t budget = 10000;
  /// Shuffles the generator order of the orbit search; the verdict does not
  /// depend on it, the witness may.
  std::optional<std::uint64_t> seed;
};

/// Reads LPAKIT_SEED into PointedIsoOptions::seed.
PointedIsoOptions options_from_env(std::uint64_t budget = 10000);

struct PointedIsoResult {
  IsoVerdict verdict = IsoVerdict::Unknown;
  /// For Yes: automorphism of the common group, column j is the image of generator j.
  IntMatrix witness;
  /// For No: "group-mismatch", "order-mismatch", "free-content-mismatch" or "torsion-orbit".
  std::string certificate_kind;
  std::string certificate;
  /// For "torsion-orbit": the point's torsion part is compared modulo this
  /// multiple of the torsion subgroup (0: compared exactly).
  BigInt modulus = 0;
  std::size_t orbit_size = 0;
};

/// Decides whether some automorphism of the group sends p.point to q.point.
///
/// Automorphisms of T + Z^r are block triangular [[C, B], [0, A]] with
/// C in Aut(T), A in GL_r(Z) and B arbitrary, so (t, f) ~ (t', f') iff f and f'
/// have the same content g and some C moves t into t' + gT. The search over
/// Aut(T) is a breadth-first orbit enumeration from unit scalings and
/// elementary transvections. Witnesses are verified before being returned.
PointedIsoResult pointed_isomorphic(const PointedAbGroup& p, const PointedAbGroup& q,
                                    const PointedIsoOptions& options = {});

IntVector apply_endomorphism(const FgAbGroup& g, const IntMatrix& m, const IntVector& x);

/// True iff m (columns = generator images) is a well-defined bijective endomorphism.
bool is_automorphism(const FgAbGroup& g, const IntMatrix& m);

nlohmann::json to_json(const PointedIsoResult& r);

}  // namespace lpakit
