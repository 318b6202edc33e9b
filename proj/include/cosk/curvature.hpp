#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cosk/sym2.hpp"

namespace cosk {

// Algebraic curvature tensor R on R^n in the convention where
// R(X, Y, X, Y) is the (unnormalized) sectional curvature of span{X, Y};
// on the unit round sphere R_ijij = +1 for i != j.
//
// Dense n^4 storage.  Every write goes through the full symmetry orbit
// (antisymmetry in each index pair, symmetry under pair exchange), so those
// relations hold exactly at all times.  The first Bianchi identity is *not*
// structural: measure it with bianchi_residual().
class CurvatureTensor {
 public:
  explicit CurvatureTensor(int n);

  int dim() const { return n_; }
  // Dimension of the traceless symmetric 2-tensors: (n-1)(n+2)/2.
  int sym_dim() const { return (n_ - 1) * (n_ + 2) / 2; }

  double operator()(int i, int j, int k, int l) const {
    return a_[idx(i, j, k, l)];
  }

  // Assigns R_ijkl = v together with the seven symmetry images.  Requires
  // i != j and k != l unless v == 0 (degenerate slots are identically zero).
  void set(int i, int j, int k, int l, double v);
  void add(int i, int j, int k, int l, double dv);

  // Full contraction R(X, Y, Z, W).
  double eval(const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
              const Eigen::VectorXd& Z, const Eigen::VectorXd& W) const;

  double max_abs() const;

  CurvatureTensor& operator+=(const CurvatureTensor& o);
  CurvatureTensor& operator-=(const CurvatureTensor& o);
  CurvatureTensor& operator*=(double s);
  friend CurvatureTensor operator+(CurvatureTensor a, const CurvatureTensor& b) {
    a += b;
    return a;
  }
  friend CurvatureTensor operator-(CurvatureTensor a, const CurvatureTensor& b) {
    a -= b;
    return a;
  }
  friend CurvatureTensor operator*(double s, CurvatureTensor a) {
    a *= s;
    return a;
  }

 private:
  std::size_t idx(int i, int j, int k, int l) const;
  int n_;
  std::vector<double> a_;
};

// 1 + max |R entry|; the reference magnitude for relative tolerances.
double scale_of(const CurvatureTensor& R);

// max over all index quadruples of |R_ijkl + R_jkil + R_kijl|.
double bianchi_residual(const CurvatureTensor& R);

// Second-kind action on symmetric 2-tensors: (R phi)_ij = sum_kl R_iklj phi_kl.
SymTwoTensor apply_second_kind(const CurvatureTensor& R, const SymTwoTensor& phi);

// Bilinear form of the second kind: sum_ijkl R_ijkl phi_il psi_jk,
// evaluated as a direct quadruple sum.
double ring(const CurvatureTensor& R, const SymTwoTensor& phi,
            const SymTwoTensor& psi);

struct Scalars {
  Eigen::MatrixXd ricci;  // Ric_ab = sum_k R(e_a, e_k, e_b, e_k)
  double scalar = 0;      // S = tr Ric
};
Scalars ricci_scalar(const CurvatureTensor& R);

// Unit probe tensors attached to a frame-index tuple.
//   Two distinct indices {i, j}:
//     (e_i (.) e_i - e_j (.) e_j) / (2 sqrt 2)   value of the form: R_ijij
//     (e_i (.) e_j) / sqrt 2                     value of the form: R_ijij
//   Four distinct indices {i, j, k, l}:
//     (e_i (.) e_j + e_k (.) e_l) / 2
//     (e_i (.) e_j - e_k (.) e_l) / 2
//     (e_i(.)e_i + e_j(.)e_j - e_k(.)e_k - e_l(.)e_l) / 4
std::vector<SymTwoTensor> probe_tensors(int n, const std::vector<int>& indices);

}  // namespace cosk
