#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <boost/rational.hpp>

#include "cosk/basis.hpp"

namespace cosk {

// The curvature operator of the second kind as an explicit N x N symmetric
// matrix over an orthonormal basis of the traceless symmetric 2-tensors,
// N = (n-1)(n+2)/2.
struct SecondKindMatrix {
  Eigen::MatrixXd M;  // exactly symmetric
  std::vector<BasisLabel> labels;
  int n = 0;
  double scalar = 0;  // scalar curvature of the source tensor
};

// M_ab = form(b_a, b_b); the basis must be orthonormal and complete.
SecondKindMatrix assemble(const CurvatureTensor& R, const LabeledBasis& basis);
SecondKindMatrix assemble(const CurvatureTensor& R);  // standard basis

// Ascending eigenvalues.
Eigen::VectorXd eigenvalues(const SecondKindMatrix& M);

// f(values, x) = sum of the floor(x) smallest values plus the fractional part
// times the next one.  Defined for 0 <= x <= values.size().
double f_partial(std::vector<double> values, double x);

enum class AlphaVerdict {
  Positive,
  Nonnegative,
  Indefinite,
  Nonpositive,
  Negative,
  Zero,
};
const char* verdict_name(AlphaVerdict v);

struct AlphaStatus {
  AlphaVerdict verdict = AlphaVerdict::Indefinite;
  double alpha = 0;
  double f_pos = 0;  // f(eigs, alpha)
  double f_neg = 0;  // f(-eigs sorted, alpha)
  double tol = 0;
};
AlphaStatus alpha_status(const Eigen::VectorXd& eigs_ascending, double alpha,
                         double tol = 1e-9);

struct Threshold {
  bool attained = false;  // false: f(eigs, .) < 0 on all of [1, N]
  double alpha = 0;
};
// Smallest alpha in [1, N] with f(eigs, alpha) >= 0 (piecewise-linear root).
Threshold alpha_threshold(const Eigen::VectorXd& eigs_ascending,
                          double tol = 1e-9);

// Minimum over `trials` orthonormal bases (the eigenbasis plus random
// rotations of the reference basis) of the alpha-weighted partial sum of the
// diagonal, sorted ascending.  Never smaller than f(eigs, alpha) - eps.
double basis_probe_min(const SecondKindMatrix& M, double alpha, int trials,
                       std::uint64_t seed);

using Rat = boost::rational<long long>;
double to_double(const Rat& r);

// Exact threshold constants at complex dimension m and their bookkeeping
// identities (verified in exact rational arithmetic):
//   alpha_m       = (3m^3 - m + 2) / 2m
//                 = (m^2-1) + 2 + (m-1) + (m-2)(m^2-1)/2m
//                 = (m^2-1) + 2 + (m-1)^2 (m+2)/2m
//   beta_m        = (3m^3 + 2m^2 - 3m - 2) / 2m
//   gamma_m       = (3m^2 + 2m - 1) / 2
//   beta_tilde_m  = m(m+2)(3m+5) / 2(m+1)          ( = beta_{m+1} )
//                 = (m^2-1) + 4m + 1 + m(m^2+m+2)/2(m+1)
//   gamma_tilde_m = (3m^2 + 8m + 4) / 2            ( = gamma_{m+1} )
//                 = (m^2-1) + 4m + 3 + m^2/2
//   cp_threshold  = 3(m^2-1)/2
//   N_at_2m       = (2m-1)(m+1)
struct ThresholdConstants {
  int m = 0;
  Rat alpha_m, beta_m, gamma_m, beta_tilde, gamma_tilde, cp_threshold, N_at_2m;
  bool decompositions_exact = false;
};
ThresholdConstants threshold_constants(int m);

}  // namespace cosk
