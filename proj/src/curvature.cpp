#include "cosk/curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace cosk {

CurvatureTensor::CurvatureTensor(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("CurvatureTensor: dimension must be >= 1");
  a_.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
}

std::size_t CurvatureTensor::idx(int i, int j, int k, int l) const {
  if (i < 0 || j < 0 || k < 0 || l < 0 || i >= n_ || j >= n_ || k >= n_ ||
      l >= n_)
    throw std::out_of_range("CurvatureTensor: index out of range");
  return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
}

void CurvatureTensor::set(int i, int j, int k, int l, double v) {
  if ((i == j || k == l) && v != 0.0)
    throw std::invalid_argument(
        "CurvatureTensor::set: slots with a repeated pair index vanish "
        "identically");
  if (i == j || k == l) {
    (void)idx(i, j, k, l);  // still range-check
    return;
  }
  a_[idx(i, j, k, l)] = v;
  a_[idx(j, i, k, l)] = -v;
  a_[idx(i, j, l, k)] = -v;
  a_[idx(j, i, l, k)] = v;
  a_[idx(k, l, i, j)] = v;
  a_[idx(l, k, i, j)] = -v;
  a_[idx(k, l, j, i)] = -v;
  a_[idx(l, k, j, i)] = v;
}

void CurvatureTensor::add(int i, int j, int k, int l, double dv) {
  set(i, j, k, l, a_[idx(i, j, k, l)] + dv);
}

double CurvatureTensor::eval(const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                             const Eigen::VectorXd& Z,
                             const Eigen::VectorXd& W) const {
  if (X.size() != n_ || Y.size() != n_ || Z.size() != n_ || W.size() != n_)
    throw std::invalid_argument("CurvatureTensor::eval: dimension mismatch");
  const double* A = a_.data();
  double total = 0.0;
  for (int i = 0; i < n_; ++i) {
    if (X[i] == 0.0) continue;
    for (int j = 0; j < n_; ++j) {
      double xy = X[i] * Y[j];
      if (xy == 0.0) continue;
      for (int k = 0; k < n_; ++k) {
        double xyz = xy * Z[k];
        if (xyz == 0.0) continue;
        const double* row = A + ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_;
        double acc = 0.0;
        for (int l = 0; l < n_; ++l) acc += row[l] * W[l];
        total += xyz * acc;
      }
    }
  }
  return total;
}

double CurvatureTensor::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

CurvatureTensor& CurvatureTensor::operator+=(const CurvatureTensor& o) {
  if (o.n_ != n_)
    throw std::invalid_argument("CurvatureTensor: dimension mismatch");
  for (std::size_t p = 0; p < a_.size(); ++p) a_[p] += o.a_[p];
  return *this;
}

CurvatureTensor& CurvatureTensor::operator-=(const CurvatureTensor& o) {
  if (o.n_ != n_)
    throw std::invalid_argument("CurvatureTensor: dimension mismatch");
  for (std::size_t p = 0; p < a_.size(); ++p) a_[p] -= o.a_[p];
  return *this;
}

CurvatureTensor& CurvatureTensor::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

double scale_of(const CurvatureTensor& R) { return 1.0 + R.max_abs(); }

double bianchi_residual(const CurvatureTensor& R) {
  const int n = R.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double b = R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l);
          worst = std::max(worst, std::abs(b));
        }
  return worst;
}

SymTwoTensor apply_second_kind(const CurvatureTensor& R,
                               const SymTwoTensor& phi) {
  const int n = R.dim();
  if (phi.dim() != n)
    throw std::invalid_argument("apply_second_kind: dimension mismatch");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += R(i, k, l, j) * phi(k, l);
      out(i, j) = s;
      out(j, i) = s;
    }
  return SymTwoTensor::from_matrix(out, 0.0);
}

double ring(const CurvatureTensor& R, const SymTwoTensor& phi,
            const SymTwoTensor& psi) {
  const int n = R.dim();
  if (phi.dim() != n || psi.dim() != n)
    throw std::invalid_argument("ring: dimension mismatch");
  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double pjk = psi(j, k);
        if (pjk == 0.0) continue;
        double s = 0.0;
        for (int l = 0; l < n; ++l) s += R(i, j, k, l) * phi(i, l);
        total += s * pjk;
      }
  return total;
}

Scalars ricci_scalar(const CurvatureTensor& R) {
  const int n = R.dim();
  Scalars out;
  out.ricci = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b <= a; ++b) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += R(a, k, b, k);
      out.ricci(a, b) = s;
      out.ricci(b, a) = s;
    }
  out.scalar = out.ricci.trace();
  return out;
}

std::vector<SymTwoTensor> probe_tensors(int n, const std::vector<int>& indices) {
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] < 0 || indices[a] >= n)
      throw std::out_of_range("probe_tensors: index out of range");
    for (std::size_t b = a + 1; b < indices.size(); ++b)
      if (indices[a] == indices[b])
        throw std::invalid_argument("probe_tensors: indices must be distinct");
  }
  auto e = [n](int i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v[i] = 1.0;
    return v;
  };
  std::vector<SymTwoTensor> out;
  if (indices.size() == 2) {
    const int i = indices[0], j = indices[1];
    out.push_back((1.0 / (2.0 * std::sqrt(2.0))) *
                  (SymTwoTensor::sym_product(e(i), e(i)) -
                   SymTwoTensor::sym_product(e(j), e(j))));
    out.push_back((1.0 / std::sqrt(2.0)) * SymTwoTensor::sym_product(e(i), e(j)));
  } else if (indices.size() == 4) {
    const int i = indices[0], j = indices[1], k = indices[2], l = indices[3];
    out.push_back(0.5 * (SymTwoTensor::sym_product(e(i), e(j)) +
                         SymTwoTensor::sym_product(e(k), e(l))));
    out.push_back(0.5 * (SymTwoTensor::sym_product(e(i), e(j)) -
                         SymTwoTensor::sym_product(e(k), e(l))));
    out.push_back(0.25 * (SymTwoTensor::sym_product(e(i), e(i)) +
                          SymTwoTensor::sym_product(e(j), e(j)) -
                          SymTwoTensor::sym_product(e(k), e(k)) -
                          SymTwoTensor::sym_product(e(l), e(l))));
  } else {
    throw std::invalid_argument("probe_tensors: expected 2 or 4 indices");
  }
  for (SymTwoTensor& h : out) h.assert_traceless();
  return out;
}

}  // namespace cosk
