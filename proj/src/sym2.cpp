#include "cosk/sym2.hpp"

#include <cmath>
#include <stdexcept>

namespace cosk {

SymTwoTensor::SymTwoTensor(int n) {
  if (n < 1) throw std::invalid_argument("SymTwoTensor: dimension must be >= 1");
  mat_ = Eigen::MatrixXd::Zero(n, n);
}

SymTwoTensor SymTwoTensor::sym_product(const Eigen::VectorXd& u,
                                       const Eigen::VectorXd& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("sym_product: dimension mismatch");
  SymTwoTensor t(static_cast<int>(u.size()));
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j <= i; ++j) {
      double val = u[i] * v[j] + v[i] * u[j];
      t.mat_(i, j) = val;
      t.mat_(j, i) = val;
    }
  return t;
}

SymTwoTensor SymTwoTensor::from_matrix(const Eigen::MatrixXd& M, double tol) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("from_matrix: matrix must be square");
  double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= tol))
    throw std::invalid_argument("from_matrix: matrix is not symmetric");
  SymTwoTensor t(static_cast<int>(M.rows()));
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j <= i; ++j) {
      t.mat_(i, j) = M(i, j);
      t.mat_(j, i) = M(i, j);
    }
  return t;
}

void SymTwoTensor::set(int i, int j, double v) {
  if (i < 0 || j < 0 || i >= dim() || j >= dim())
    throw std::out_of_range("SymTwoTensor::set: index out of range");
  mat_(i, j) = v;
  mat_(j, i) = v;
  traceless_ = false;
}

SymTwoTensor& SymTwoTensor::assert_traceless(double tol) {
  double t = mat_.trace();
  double scale = 1.0 + mat_.cwiseAbs().maxCoeff();
  if (!(std::abs(t) <= tol * scale))
    throw std::invalid_argument("assert_traceless: trace is not zero");
  traceless_ = true;
  return *this;
}

SymTwoTensor& SymTwoTensor::operator+=(const SymTwoTensor& o) {
  mat_ += o.mat_;
  traceless_ = traceless_ && o.traceless_;
  return *this;
}

SymTwoTensor& SymTwoTensor::operator-=(const SymTwoTensor& o) {
  mat_ -= o.mat_;
  traceless_ = traceless_ && o.traceless_;
  return *this;
}

SymTwoTensor& SymTwoTensor::operator*=(double s) {
  mat_ *= s;
  return *this;
}

double inner(const SymTwoTensor& a, const SymTwoTensor& b) {
  return (a.matrix().array() * b.matrix().array()).sum();
}

double norm(const SymTwoTensor& a) { return std::sqrt(inner(a, a)); }

}  // namespace cosk
