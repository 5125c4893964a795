#include "lpakit/smith.hpp"

namespace lpakit {

template SmithDecomposition<BigInt> smith<BigInt>(const IntMatrix&);
template std::vector<BigInt> invariant_factors<BigInt>(const IntMatrix&);

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  // M V = U^{-1} D, so the columns of V past the rank span the kernel.
  const auto snf = smith(m);
  std::vector<IntVector> basis;
  for (Eigen::Index j = snf.rank(); j < m.cols(); ++j) {
    IntVector x = snf.V.col(j);
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (x(i) == 0) continue;
      if (x(i) < 0) x = -x;
      break;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace lpakit
