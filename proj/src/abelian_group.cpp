#include "lpakit/abelian_group.hpp"

#include "lpakit/smith.hpp"

#include <limits>

namespace lpakit {

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace

FgAbGroup FgAbGroup::from_cyclic_orders(const std::vector<BigInt>& orders) {
  const Eigen::Index n = static_cast<Eigen::Index>(orders.size());
  IntMatrix diag = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) diag(i, i) = orders[i];
  FgAbGroup g;
  for (const auto& d : invariant_factors(diag)) {
    if (d == 0)
      ++g.rank;
    else if (d != 1)
      g.torsion.push_back(d);
  }
  return g;
}

BigInt FgAbGroup::torsion_order() const {
  BigInt n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

IntVector FgAbGroup::reduce(const IntVector& x) const {
  IntVector out = x;
  for (std::size_t i = 0; i < torsion.size(); ++i) out(i) = mod_floor(x(i), torsion[i]);
  return out;
}

BigInt FgAbGroup::element_order(const IntVector& x) const {
  for (std::size_t i = torsion.size(); i < generator_count(); ++i)
    if (x(i) != 0) return 0;
  BigInt order = 1;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    const BigInt c = mod_floor(x(i), torsion[i]);
    const BigInt o = torsion[i] / gcd(c, torsion[i]);
    order = order / gcd(order, o) * o;
  }
  return order;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.str();
  }
  if (rank > 0) {
    if (!s.empty()) s += " + ";
    s += rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  }
  return s;
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<BigInt> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  orders.insert(orders.end(), a.rank + b.rank, BigInt(0));
  return FgAbGroup::from_cyclic_orders(orders);
}

FgAbGroup quotient_by_multiple(const FgAbGroup& h, const BigInt& n) {
  std::vector<BigInt> orders;
  for (const auto& e : h.torsion) orders.push_back(n == 0 ? e : gcd(n, e));
  orders.insert(orders.end(), h.rank, abs(n));
  return FgAbGroup::from_cyclic_orders(orders);
}

FgAbGroup ext1(const FgAbGroup& g, const FgAbGroup& h) {
  FgAbGroup out;
  for (const auto& d : g.torsion) out = direct_sum(out, quotient_by_multiple(h, d));
  return out;
}

FgAbGroup hom_group(const FgAbGroup& g, const FgAbGroup& h) {
  std::vector<BigInt> orders;
  for (std::size_t i = 0; i < g.rank; ++i) {
    orders.insert(orders.end(), h.torsion.begin(), h.torsion.end());
    orders.insert(orders.end(), h.rank, BigInt(0));
  }
  for (const auto& d : g.torsion)
    for (const auto& e : h.torsion) orders.push_back(gcd(d, e));
  return FgAbGroup::from_cyclic_orders(orders);
}

Cokernel cokernel(const IntMatrix& m) {
  const auto snf = smith(m);
  Cokernel c;
  std::vector<Eigen::Index> kept_rows;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const BigInt d = i < m.cols() ? snf.D(i, i) : BigInt(0);
    if (d == 1) continue;
    if (d == 0) {
      ++c.group.rank;
    } else {
      c.group.torsion.push_back(d);
    }
    kept_rows.push_back(i);
  }
  // Torsion rows precede free rows already: d_i != 0 only for i < rank(D).
  c.projection.resize(static_cast<Eigen::Index>(kept_rows.size()), m.rows());
  for (std::size_t k = 0; k < kept_rows.size(); ++k) c.projection.row(k) = snf.U.row(kept_rows[k]);
  return c;
}

nlohmann::json to_json(const BigInt& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return n.convert_to<long long>();
  return n.str();
}

nlohmann::json to_json(const IntVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(to_json(v(i)));
  return j;
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    j.push_back(row);
  }
  return j;
}

nlohmann::json to_json(const FgAbGroup& g) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& d : g.torsion) torsion.push_back(to_json(d));
  return {{"rank", g.rank}, {"torsion", torsion}, {"text", g.to_string()}};
}

nlohmann::json to_json(const PointedAbGroup& p) {
  auto j = to_json(p.group);
  j["unit_class"] = to_json(p.point);
  return j;
}

}  // namespace lpakit
