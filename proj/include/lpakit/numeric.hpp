#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <vector>

namespace lpakit {

// Expression templates are disabled so that the types compose with Eigen's
// own expression machinery.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;

inline IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.front().size());
  IntMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = BigInt(rows[i][j]);
  return m;
}

inline IntVector int_vector(const std::vector<long long>& xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = BigInt(xs[i]);
  return v;
}

inline std::vector<long long> to_ll(const IntVector& v) {
  std::vector<long long> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v(i).convert_to<long long>();
  return out;
}

inline bool is_zero(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

// Floor-mod into [0, m) for m > 0.
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

}  // namespace lpakit
