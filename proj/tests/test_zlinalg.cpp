#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpakit/abelian_group.hpp"
#include "lpakit/pointed_iso.hpp"
#include "lpakit/smith.hpp"

#include "oracles.hpp"
#include "support.hpp"

using namespace lpakit;
using namespace lpakit::testing;

namespace {

FgAbGroup group(std::size_t rank, std::vector<long long> torsion) {
  FgAbGroup g;
  g.rank = rank;
  for (auto d : torsion) g.torsion.emplace_back(d);
  return g;
}

PointedAbGroup pointed(const FgAbGroup& g, std::vector<long long> x) { return {g, int_vector(x)}; }

std::vector<std::vector<long long>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<long long>> rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j).convert_to<long long>());
  return rows;
}

void check_smith(const IntMatrix& m) {
  const auto s = smith(m);
  CHECK(IntMatrix(s.U * m * s.V) == s.D);
  CHECK(IntMatrix(s.U * s.U_inv) == IntMatrix::Identity(m.rows(), m.rows()));
  CHECK(IntMatrix(s.V_inv * s.V) == IntMatrix::Identity(m.cols(), m.cols()));
  const auto d = s.diagonal();
  CHECK(invariant_factors(m) == d);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK((d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0));
  if (m.rows() == 0 || m.cols() == 0) return;
  const auto minors = determinantal_divisors(to_rows(m));
  BigInt product = 1;
  for (std::size_t k = 0; k < d.size(); ++k) {
    product *= d[k];
    CHECK(product == BigInt(static_cast<long long>(minors[k])));
  }
}

}  // namespace

TEST_CASE("smith examples") {
  CHECK(smith(int_matrix({{2, 0}, {0, 3}})).D == int_matrix({{1, 0}, {0, 6}}));
  const auto zero = smith(int_matrix({{0, 0}, {0, 0}}));
  CHECK(zero.D == int_matrix({{0, 0}, {0, 0}}));
  CHECK(zero.U == IntMatrix::Identity(2, 2));
  CHECK(smith(int_matrix({{-1, -1}, {-1, -1}})).D == int_matrix({{1, 0}, {0, 0}}));
  CHECK(smith(IntMatrix(0, 3)).D.size() == 0);
}

TEST_CASE("smith is deterministic") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const IntMatrix m = random_matrix(rng, 4, 5, 20);
    const auto a = smith(m), b = smith(m);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
  }
}

TEST_CASE("property: smith against determinantal divisors") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int t = 0; t < 150; ++t) check_smith(random_matrix(rng, dim(rng), dim(rng), 50));
  // Low-rank inputs exercise the zero tail of the diagonal.
  for (int t = 0; t < 50; ++t) {
    const IntMatrix a = random_matrix(rng, 5, 2, 6), b = random_matrix(rng, 2, 5, 6);
    check_smith(IntMatrix(a * b));
  }
}

TEST_CASE("kernel basis") {
  const auto k = kernel_basis(int_matrix({{-1, -1}, {-1, -1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == int_vector({1, -1}));
  CHECK(kernel_basis(IntMatrix::Identity(2, 2)).empty());
  const auto z = kernel_basis(int_matrix({{0}}));
  REQUIRE(z.size() == 1);
  CHECK(z[0] == int_vector({1}));
}

TEST_CASE("property: kernel basis is a saturated basis of the right size") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = random_matrix(rng, 3, 2, 5), b = random_matrix(rng, 2, 5, 5);
    const IntMatrix m = a * b;
    const auto basis = kernel_basis(m);
    CHECK(static_cast<Eigen::Index>(basis.size()) == m.cols() - smith(m).rank());
    for (const auto& x : basis) {
      CHECK(is_zero(IntVector(m * x)));
      Eigen::Index first = 0;
      while (x(first) == 0) ++first;
      CHECK(x(first) > 0);
    }
    if (basis.empty()) continue;
    IntMatrix cols(m.cols(), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) cols.col(static_cast<Eigen::Index>(i)) = basis[i];
    for (const auto& d : invariant_factors(cols)) CHECK(d == 1);
  }
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel(int_matrix({{-1}})).group.is_trivial());
  const auto c3 = cokernel(int_matrix({{-3}}));
  CHECK(c3.group == FgAbGroup::cyclic(3));
  CHECK(c3.project(int_vector({1})) == int_vector({1}));
  const auto k = cokernel(int_matrix({{-1, -1}, {-1, -1}}));
  CHECK(k.group == FgAbGroup::free(1));
  CHECK(is_zero(k.project(int_vector({1, 1}))));
}

TEST_CASE("property: cokernel projection kills columns and is onto") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix m = random_matrix(rng, dim(rng), dim(rng), 6);
    const auto c = cokernel(m);
    for (Eigen::Index j = 0; j < m.cols(); ++j) CHECK(is_zero(c.project(IntVector(m.col(j)))));
    // The projected standard basis generates: its relation matrix against the
    // torsion orders has trivial invariant factors.
    const Eigen::Index n = static_cast<Eigen::Index>(c.group.generator_count());
    IntMatrix gens(n, m.rows() + static_cast<Eigen::Index>(c.group.torsion_count()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) gens.col(i) = c.project(IntVector(IntMatrix::Identity(m.rows(), m.rows()).col(i)));
    for (std::size_t i = 0; i < c.group.torsion_count(); ++i) {
      gens.col(m.rows() + static_cast<Eigen::Index>(i)).setZero();
      gens(static_cast<Eigen::Index>(i), m.rows() + static_cast<Eigen::Index>(i)) = c.group.torsion[i];
    }
    if (n > 0)
      for (const auto& d : invariant_factors(gens)) CHECK(d == 1);
  }
}

TEST_CASE("abelian group normal form and functors") {
  CHECK(FgAbGroup::from_cyclic_orders({BigInt(2), BigInt(3)}) == group(0, {6}));
  CHECK(FgAbGroup::from_cyclic_orders({BigInt(4), BigInt(0), BigInt(6), BigInt(1)}) == group(1, {2, 12}));
  CHECK(group(2, {2, 4}).to_string() == "Z/2 + Z/4 + Z^2");
  CHECK(FgAbGroup{}.to_string() == "0");

  CHECK(ext1(group(0, {2}), group(0, {2})) == group(0, {2}));
  CHECK(ext1(group(1, {}), group(0, {5})).is_trivial());
  CHECK(ext1(group(0, {6}), group(0, {4})) == group(0, {2}));
  CHECK(ext1(group(0, {3}), group(1, {})) == group(0, {3}));

  CHECK(hom_group(group(1, {}), group(0, {3})) == group(0, {3}));
  CHECK(hom_group(group(0, {2}), group(0, {3})).is_trivial());
  CHECK(hom_group(group(2, {}), group(1, {})) == group(2, {}));
  CHECK(hom_group(group(0, {4}), group(1, {6})) == group(0, {2}));

  CHECK(quotient_by_multiple(group(1, {4}), BigInt(6)) == group(0, {2, 6}));
  CHECK(direct_sum(group(0, {2}), group(1, {3})) == group(1, {6}));

  const auto g = group(1, {4});
  CHECK(g.element_order(int_vector({2, 0})) == 2);
  CHECK(g.element_order(int_vector({0, 1})) == 0);
  CHECK(g.reduce(int_vector({-1, 5})) == int_vector({3, 5}));
}

TEST_CASE("pointed isomorphism examples") {
  const auto z4 = group(0, {4});
  const auto yes = pointed_isomorphic(pointed(z4, {1}), pointed(z4, {3}));
  CHECK(yes.verdict == IsoVerdict::Yes);
  CHECK(yes.witness == int_matrix({{3}}));

  const auto no = pointed_isomorphic(pointed(z4, {2}), pointed(z4, {1}));
  CHECK(no.verdict == IsoVerdict::No);
  CHECK(no.certificate_kind == "order-mismatch");

  const auto z = group(1, {});
  const auto id = pointed_isomorphic(pointed(z, {1}), pointed(z, {1}));
  CHECK(id.verdict == IsoVerdict::Yes);
  CHECK(id.witness == int_matrix({{1}}));

  CHECK(pointed_isomorphic(pointed(z, {2}), pointed(z, {-2})).verdict == IsoVerdict::Yes);
  CHECK(pointed_isomorphic(pointed(z, {2}), pointed(z, {3})).certificate_kind == "free-content-mismatch");
  CHECK(pointed_isomorphic(pointed(z4, {1}), pointed(group(0, {2, 2}), {1, 0})).certificate_kind == "group-mismatch");

  // (0, 2) and (2, 2) in Z/4 + Z: the transvection by the free generator moves 0 to 2.
  const auto mixed = group(1, {4});
  const auto m = pointed_isomorphic(pointed(mixed, {0, 2}), pointed(mixed, {2, 2}));
  CHECK(m.verdict == IsoVerdict::Yes);
  // (1, 2) and (0, 2): the orbit {1, 3} of 1 misses 0 + 2(Z/4).
  const auto n = pointed_isomorphic(pointed(mixed, {1, 2}), pointed(mixed, {0, 2}));
  CHECK(n.verdict == IsoVerdict::No);
  CHECK(n.certificate_kind == "torsion-orbit");
  CHECK(n.modulus == 2);
  const auto o = pointed_isomorphic(pointed(mixed, {1, 4}), pointed(mixed, {2, 4}));
  CHECK(o.verdict == IsoVerdict::No);
  CHECK(o.certificate_kind == "torsion-orbit");
  CHECK(o.modulus == 4);
}

TEST_CASE("pointed isomorphism budget") {
  const auto big = group(0, {97, 97});
  PointedIsoOptions small;
  small.budget = 100;
  CHECK(pointed_isomorphic(pointed(big, {1, 0}), pointed(big, {0, 1}), small).verdict == IsoVerdict::Unknown);
  CHECK(pointed_isomorphic(pointed(big, {1, 0}), pointed(big, {0, 1})).verdict == IsoVerdict::Yes);
  // Cheap certificates do not need the search.
  CHECK(pointed_isomorphic(pointed(big, {1, 0}), pointed(big, {0, 0}), small).verdict == IsoVerdict::No);
}

TEST_CASE("pointed isomorphism verdict does not depend on the seed") {
  const auto g = group(1, {2, 4, 8});
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    auto random_point = [&] {
      return pointed(g, {static_cast<long long>(rng() % 2), static_cast<long long>(rng() % 4),
                         static_cast<long long>(rng() % 8), static_cast<long long>(rng() % 3) * 2});
    };
    const auto p = random_point(), q = random_point();
    const auto base = pointed_isomorphic(p, q);
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      PointedIsoOptions o;
      o.seed = seed;
      const auto r = pointed_isomorphic(p, q, o);
      CHECK(r.verdict == base.verdict);
      if (r.verdict == IsoVerdict::Yes) CHECK(apply_endomorphism(g, r.witness, p.point) == g.reduce(q.point));
    }
  }
}

TEST_CASE("property: pointed isomorphism is reflexive and symmetric") {
  std::mt19937_64 rng(6);
  const std::vector<FgAbGroup> groups{group(0, {6}), group(0, {2, 4}), group(1, {3}), group(2, {2}), group(2, {}),
                                      group(1, {2, 2})};
  for (const auto& g : groups) {
    for (int t = 0; t < 80; ++t) {
      auto random_point = [&] {
        IntVector x(static_cast<Eigen::Index>(g.generator_count()));
        for (std::size_t i = 0; i < g.torsion_count(); ++i)
          x(static_cast<Eigen::Index>(i)) = BigInt(static_cast<long long>(rng() % g.torsion[i].convert_to<unsigned long long>()));
        for (std::size_t i = 0; i < g.rank; ++i)
          x(static_cast<Eigen::Index>(g.torsion_count() + i)) = BigInt(static_cast<long long>(rng() % 7) - 3);
        return PointedAbGroup{g, x};
      };
      const auto p = random_point(), q = random_point();
      const auto self = pointed_isomorphic(p, p);
      REQUIRE(self.verdict == IsoVerdict::Yes);
      CHECK(is_automorphism(g, self.witness));
      const auto pq = pointed_isomorphic(p, q), qp = pointed_isomorphic(q, p);
      CHECK(pq.verdict == qp.verdict);
      if (pq.verdict == IsoVerdict::Yes) {
        CHECK(is_automorphism(g, pq.witness));
        CHECK(apply_endomorphism(g, pq.witness, p.point) == q.point);
        CHECK(apply_endomorphism(g, qp.witness, q.point) == p.point);
      }
    }
  }
}

TEST_CASE("property: pointed isomorphism on T + Z against every automorphism") {
  // Aut(T + Z) is exactly [[C, b], [0, +-1]]: the orbit of (t, f) is {(C t + f b, +-f)}.
  for (const auto& torsion : std::vector<std::vector<std::int64_t>>{{2}, {4}, {6}, {2, 2}, {2, 4}, {3, 3}}) {
    BruteOrbits t(torsion, true);
    FgAbGroup g;
    g.rank = 1;
    for (auto d : torsion) g.torsion.emplace_back(d);
    auto point = [&](std::int64_t code, long long f) {
      IntVector x(static_cast<Eigen::Index>(torsion.size() + 1));
      for (std::size_t i = 0; i < torsion.size(); ++i) x(static_cast<Eigen::Index>(i)) = BigInt(t.digit(code, i));
      x(static_cast<Eigen::Index>(torsion.size())) = BigInt(f);
      return PointedAbGroup{g, x};
    };
    for (long long f = -4; f <= 4; ++f)
      for (long long f2 : {f, -f, f + 1})
        for (std::int64_t a = 0; a < t.size(); ++a)
          for (std::int64_t b = 0; b < t.size(); ++b) {
            bool expected = false;
            if (f2 == f || f2 == -f)
              for (const auto& phi : t.automorphisms())
                for (std::int64_t s = 0; s < t.size() && !expected; ++s)
                  expected = t.add(phi[static_cast<std::size_t>(a)], t.times(s, f < 0 ? -f : f)) == b;
            const auto r = pointed_isomorphic(point(a, f), point(b, f2));
            CHECK((r.verdict == IsoVerdict::Yes) == expected);
          }
  }
}

TEST_CASE("is_automorphism") {
  const auto g = group(1, {2, 4});
  CHECK(is_automorphism(g, IntMatrix::Identity(3, 3)));
  // g_1 -> g_1 + 2 g_2 is well defined; g_1 -> g_1 + g_2 is not (order 4 image of an order 2 generator).
  CHECK(is_automorphism(g, int_matrix({{1, 0, 0}, {2, 1, 0}, {0, 0, 1}})));
  CHECK_FALSE(is_automorphism(g, int_matrix({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}})));
  CHECK_FALSE(is_automorphism(g, int_matrix({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}})));
  CHECK_FALSE(is_automorphism(g, int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})));
  CHECK(is_automorphism(g, int_matrix({{1, 0, 1}, {0, 3, 3}, {0, 0, -1}})));
  CHECK_FALSE(is_automorphism(g, int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 1, 1}})));
}

TEST_CASE("pointed isomorphism JSON") {
  const auto z4 = group(0, {4});
  const auto yes = to_json(pointed_isomorphic(pointed(z4, {1}), pointed(z4, {3})));
  CHECK(yes["verdict"] == "yes");
  CHECK(yes["witness"] == nlohmann::json::parse("[[3]]"));
  const auto no = to_json(pointed_isomorphic(pointed(z4, {2}), pointed(z4, {1})));
  CHECK(no["certificate"]["kind"] == "order-mismatch");
}
