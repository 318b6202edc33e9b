#pragma once

#include <cstdint>
#include <vector>

#include "cosk/kahler.hpp"

namespace cosk {

// Constant holomorphic sectional curvature c at complex dimension m:
//   R(X,Y,Z,W) = c/4 ( g(X,Z)g(Y,W) - g(X,W)g(Y,Z)
//                    + g(X,JZ)g(Y,JW) - g(X,JW)g(Y,JZ) + 2 g(X,JY)g(Z,JW) ).
KahlerOperator const_hsc(int m, double c);

// Round sphere: R(X,Y,Z,W) = kappa (g(X,Z)g(Y,W) - g(X,W)g(Y,Z)).
CurvatureTensor sphere(int n, double kappa);
CurvatureTensor flat(int n);

// Riemannian product: block curvature on R^{nA + nB} with the factor indices
// concatenated in order.
CurvatureTensor product(const CurvatureTensor& A, const CurvatureTensor& B);

// Product of two validated operators, with indices interleaved so the result
// is adapted to the standard complex structure at m = mA + mB.
KahlerOperator kahler_product(const KahlerOperator& A, const KahlerOperator& B);

// const_hsc(m, 4) x flat complex line; complex dimension m + 1.
KahlerOperator cp_times_flat(int m);

// Orthonormal tensor basis of the space cut out by the linear constraints
// (index-pair antisymmetries and pair exchange are structural; first Bianchi
// and J-invariance of the last pair are solved for).  Dimension (m(m+1)/2)^2.
struct KahlerSubspace {
  int m = 0;
  std::vector<CurvatureTensor> basis;
};
const KahlerSubspace& kahler_subspace(int m);  // cached per m

// Same without the J-invariance rows.  Dimension n^2 (n^2 - 1) / 12.
struct AlgebraicSubspace {
  int n = 0;
  std::vector<CurvatureTensor> basis;
};
const AlgebraicSubspace& algebraic_subspace(int n);  // cached per n

// Deterministic Gaussian combination over the respective subspace basis,
// normalized to unit max-entry.
KahlerOperator random_kahler(int m, std::uint64_t seed);
CurvatureTensor random_algebraic(int n, std::uint64_t seed);

struct ScanPoint {
  double ratio = 0;
  double threshold = 0;
};
struct ScanResult {
  std::vector<ScanPoint> points;
  double min_threshold = 0;
  double min_ratio = 0;
};
// Thresholds of const_hsc(m-1, 4) x const_hsc(1, 4t) over the ratio grid.
ScanResult scaled_product_scan(
    int m, const std::vector<double>& ratios = {0.25, 0.5, 1.0, 2.0, 4.0});

}  // namespace cosk
