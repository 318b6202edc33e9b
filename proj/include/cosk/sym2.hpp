#pragma once

#include <Eigen/Dense>

namespace cosk {

// Symmetric 2-tensor on R^n.  The lower triangle always mirrors the upper
// triangle bitwise, so symmetry never degrades under arithmetic.
class SymTwoTensor {
 public:
  explicit SymTwoTensor(int n);

  // u (.) v = u v^T + v u^T  (symmetric product, no 1/2 factor).
  static SymTwoTensor sym_product(const Eigen::VectorXd& u,
                                  const Eigen::VectorXd& v);

  // Requires max |M - M^T| <= tol; the upper triangle is then mirrored so the
  // stored tensor is exactly symmetric.
  static SymTwoTensor from_matrix(const Eigen::MatrixXd& M, double tol = 1e-12);

  int dim() const { return static_cast<int>(mat_.rows()); }
  double operator()(int i, int j) const { return mat_(i, j); }
  void set(int i, int j, double v);  // writes (i,j) and (j,i)

  double trace() const { return mat_.trace(); }
  const Eigen::MatrixXd& matrix() const { return mat_; }

  // Verifies |trace| <= tol * (1 + max |entry|), then marks the flag.
  SymTwoTensor& assert_traceless(double tol = 1e-12);
  bool traceless() const { return traceless_; }

  SymTwoTensor& operator+=(const SymTwoTensor& o);
  SymTwoTensor& operator-=(const SymTwoTensor& o);
  SymTwoTensor& operator*=(double s);
  friend SymTwoTensor operator+(SymTwoTensor a, const SymTwoTensor& b) {
    a += b;
    return a;
  }
  friend SymTwoTensor operator-(SymTwoTensor a, const SymTwoTensor& b) {
    a -= b;
    return a;
  }
  friend SymTwoTensor operator*(double s, SymTwoTensor a) {
    a *= s;
    return a;
  }

 private:
  Eigen::MatrixXd mat_;
  bool traceless_ = false;
};

// <A, B> = tr(A^T B) = sum_ij A_ij B_ij.
double inner(const SymTwoTensor& a, const SymTwoTensor& b);
double norm(const SymTwoTensor& a);

}  // namespace cosk
