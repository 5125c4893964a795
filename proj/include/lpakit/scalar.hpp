#pragma once

#include "lpakit/errors.hpp"
#include "lpakit/numeric.hpp"

#include <cstdint>
#include <ostream>
#include <string>

namespace lpakit {

/// Integers modulo a prime P, P < 2^31.
template <std::uint32_t P>
class PrimeField {
 public:
  PrimeField() = default;
  PrimeField(long long n) : v_(static_cast<std::uint32_t>(((n % static_cast<long long>(P)) + P) % P)) {}

  std::uint32_t value() const { return v_; }

  PrimeField& operator+=(PrimeField o) {
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + o.v_) % P);
    return *this;
  }
  PrimeField& operator-=(PrimeField o) {
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + P - o.v_) % P);
    return *this;
  }
  PrimeField& operator*=(PrimeField o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % P);
    return *this;
  }
  PrimeField& operator/=(PrimeField o) { return *this *= o.inverse(); }

  PrimeField inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    std::uint64_t base = v_, result = 1;
    for (std::uint32_t e = P - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
    }
    return PrimeField(static_cast<long long>(result));
  }

  friend PrimeField operator+(PrimeField a, PrimeField b) { return a += b; }
  friend PrimeField operator-(PrimeField a, PrimeField b) { return a -= b; }
  friend PrimeField operator*(PrimeField a, PrimeField b) { return a *= b; }
  friend PrimeField operator/(PrimeField a, PrimeField b) { return a /= b; }
  friend PrimeField operator-(PrimeField a) { return PrimeField() - a; }
  friend bool operator==(PrimeField a, PrimeField b) { return a.v_ == b.v_; }
  friend std::ostream& operator<<(std::ostream& os, PrimeField a) { return os << a.v_; }

 private:
  std::uint32_t v_ = 0;
};

/// What the path-algebra engine needs from a coefficient field.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
  static std::string to_string(const Rational& q) { return q.str(); }
  static const char* name() { return "Q"; }
};

template <std::uint32_t P>
struct ScalarTraits<PrimeField<P>> {
  static PrimeField<P> from_rational(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    const BigInt p = BigInt(P);
    if (den % p == 0) throw InputError("denominator " + den.str() + " vanishes in F_" + std::to_string(P));
    return PrimeField<P>(mod_floor(num, p).template convert_to<long long>()) /
           PrimeField<P>(mod_floor(den, p).template convert_to<long long>());
  }
  static std::string to_string(PrimeField<P> a) { return std::to_string(a.value()); }
  static std::string name() { return "F_" + std::to_string(P); }
};

/// Rank by Gaussian elimination; exact over any field.
template <typename S>
Eigen::Index exact_rank(Matrix<S> m) {
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Eigen::Index pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == S(0)) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(rank));
    const S inv = S(1) / m(rank, c);
    for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == S(0)) continue;
      const S factor = m(r, c) * inv;
      for (Eigen::Index k = c; k < m.cols(); ++k) m(r, k) -= factor * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace lpakit

namespace Eigen {
template <std::uint32_t P>
struct NumTraits<lpakit::PrimeField<P>> : GenericNumTraits<lpakit::PrimeField<P>> {
  using Real = lpakit::PrimeField<P>;
  using NonInteger = lpakit::PrimeField<P>;
  using Nested = lpakit::PrimeField<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
};
}  // namespace Eigen
