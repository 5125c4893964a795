#pragma once

#include "lpakit/numeric.hpp"

#include <utility>
#include <vector>

namespace lpakit {

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
/// The inverses of U and V are tracked alongside so callers never invert.
template <typename Int>
struct SmithDecomposition {
  Matrix<Int> U, D, V;
  Matrix<Int> U_inv, V_inv;

  Eigen::Index rank() const {
    Eigen::Index r = 0;
    while (r < D.rows() && r < D.cols() && D(r, r) != 0) ++r;
    return r;
  }

  std::vector<Int> diagonal() const {
    std::vector<Int> out;
    for (Eigen::Index i = 0; i < D.rows() && i < D.cols(); ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename Int>
Int abs_value(const Int& a) {
  return a < 0 ? Int(-a) : a;
}

/// With track = false only D is maintained.
template <typename Int>
class SmithWorkspace {
 public:
  SmithWorkspace(const Matrix<Int>& m, bool track) : D(m), track(track) {
    if (!track) return;
    U = U_inv = Matrix<Int>::Identity(m.rows(), m.rows());
    V = V_inv = Matrix<Int>::Identity(m.cols(), m.cols());
  }

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    D.row(i).swap(D.row(j));
    if (!track) return;
    U.row(i).swap(U.row(j));
    U_inv.col(i).swap(U_inv.col(j));
  }

  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    D.col(i).swap(D.col(j));
    if (!track) return;
    V.col(i).swap(V.col(j));
    V_inv.row(i).swap(V_inv.row(j));
  }

  // row dst += q * row src
  void add_row(Eigen::Index dst, Eigen::Index src, const Int& q) {
    D.row(dst) += q * D.row(src);
    if (!track) return;
    U.row(dst) += q * U.row(src);
    U_inv.col(src) -= q * U_inv.col(dst);
  }

  // col dst += q * col src
  void add_col(Eigen::Index dst, Eigen::Index src, const Int& q) {
    D.col(dst) += q * D.col(src);
    if (!track) return;
    V.col(dst) += q * V.col(src);
    V_inv.row(src) -= q * V_inv.row(dst);
  }

  void negate_col(Eigen::Index j) {
    D.col(j) = -D.col(j);
    if (!track) return;
    V.col(j) = -V.col(j);
    V_inv.row(j) = -V_inv.row(j);
  }

  Matrix<Int> D, U, V, U_inv, V_inv;
  bool track;
};

/// Smallest-absolute-value pivoting. Ties go to the lowest (row, column)
/// index, so the decomposition is deterministic.
template <typename Int>
void reduce_to_smith(SmithWorkspace<Int>& w) {
  auto& D = w.D;
  const Eigen::Index rows = D.rows();
  const Eigen::Index cols = D.cols();

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (D(i, j) != 0 && (pi < 0 || abs_value(D(i, j)) < abs_value(D(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    while (true) {
      bool residue = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        w.add_row(i, t, Int(-(D(i, t) / D(t, t))));
        residue = residue || D(i, t) != 0;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        w.add_col(j, t, Int(-(D(t, j) / D(t, t))));
        residue = residue || D(t, j) != 0;
      }
      if (residue) {
        Eigen::Index best_i = t, best_j = t;
        for (Eigen::Index i = t + 1; i < rows; ++i)
          if (D(i, t) != 0 && abs_value(D(i, t)) < abs_value(D(best_i, best_j))) {
            best_i = i;
            best_j = t;
          }
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (D(t, j) != 0 && abs_value(D(t, j)) < abs_value(D(best_i, best_j))) {
            best_i = t;
            best_j = j;
          }
        w.swap_rows(t, best_i);
        w.swap_cols(t, best_j);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the remainder.
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = t + 1; i < rows && bad_row < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      w.add_row(t, bad_row, Int(1));
    }
    if (D(t, t) < 0) w.negate_col(t);
  }
}

}  // namespace detail

/// Smith normal form with both transforms and their inverses.
template <typename Int>
SmithDecomposition<Int> smith(const Matrix<Int>& m) {
  detail::SmithWorkspace<Int> w(m, true);
  detail::reduce_to_smith(w);
  return {std::move(w.U), std::move(w.D), std::move(w.V), std::move(w.U_inv), std::move(w.V_inv)};
}

/// Diagonal of the Smith normal form of m, without the transforms.
template <typename Int>
std::vector<Int> invariant_factors(const Matrix<Int>& m) {
  detail::SmithWorkspace<Int> w(m, false);
  detail::reduce_to_smith(w);
  std::vector<Int> out;
  for (Eigen::Index i = 0; i < w.D.rows() && i < w.D.cols(); ++i) out.push_back(w.D(i, i));
  return out;
}

/// Z-basis of {x : M x = 0}; each vector's first nonzero entry is positive.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

extern template SmithDecomposition<BigInt> smith<BigInt>(const IntMatrix&);
extern template std::vector<BigInt> invariant_factors<BigInt>(const IntMatrix&);

}  // namespace lpakit
