#include "cosk/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace cosk {

std::string BasisLabel::str() const {
  auto pair = [this](const char* name) {
    return std::string(name) + "_{" + std::to_string(i) + "," +
           std::to_string(j) + "}";
  };
  auto single = [this](const char* name) {
    return std::string(name) + "_" + std::to_string(i);
  };
  switch (kind) {
    case BasisKind::PhiPlus:
      return pair("phi+");
    case BasisKind::PsiPlus:
      return pair("psi+");
    case BasisKind::Theta:
      return single("theta");
    case BasisKind::PhiMinus:
      return pair("phi-");
    case BasisKind::PsiMinus:
      return pair("psi-");
    case BasisKind::Eta:
      return single("eta");
    case BasisKind::Tau:
      return single("tau");
    case BasisKind::Mixed:
      return pair("h");
    case BasisKind::Zeta:
      return "zeta";
    case BasisKind::OffDiag:
      return pair("E");
    case BasisKind::Diag:
      return single("D");
  }
  return "?";
}

void LabeledBasis::append(LabeledBasis other) {
  for (auto& e : other.elems) elems.push_back(std::move(e));
  for (auto& l : other.labels) labels.push_back(l);
}

double LabeledBasis::gram_residual() const {
  double worst = 0.0;
  for (int a = 0; a < size(); ++a)
    for (int b = a; b < size(); ++b)
      worst = std::max(
          worst, std::abs(inner(elems[a], elems[b]) - (a == b ? 1.0 : 0.0)));
  return worst;
}

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

SymTwoTensor odot(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  return SymTwoTensor::sym_product(u, v);
}

void push(LabeledBasis& b, SymTwoTensor t, BasisKind kind, int i, int j = 0) {
  t.assert_traceless(1e-10);
  b.elems.push_back(std::move(t));
  b.labels.push_back(BasisLabel{kind, i, j});
}

}  // namespace

LabeledBasis build_e_plus(const ComplexStructure& J,
                          const std::vector<Eigen::VectorXd>& holo) {
  const int k = static_cast<int>(holo.size());
  std::vector<Eigen::VectorXd> Jf;
  for (const auto& f : holo) Jf.push_back(J.apply(f));
  LabeledBasis b;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      push(b, 0.5 * (odot(holo[i], holo[j]) - odot(Jf[i], Jf[j])),
           BasisKind::PhiPlus, i + 1, j + 1);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      push(b, 0.5 * (odot(holo[i], Jf[j]) + odot(Jf[i], holo[j])),
           BasisKind::PsiPlus, i + 1, j + 1);
  for (int i = 0; i < k; ++i)
    push(b, (0.5 * kInvSqrt2) * (odot(holo[i], holo[i]) - odot(Jf[i], Jf[i])),
         BasisKind::Theta, i + 1);
  for (int i = 0; i < k; ++i)
    push(b, kInvSqrt2 * odot(holo[i], Jf[i]), BasisKind::Theta, k + i + 1);
  return b;
}

LabeledBasis build_e_minus(const ComplexStructure& J,
                           const std::vector<Eigen::VectorXd>& holo) {
  const int k = static_cast<int>(holo.size());
  std::vector<Eigen::VectorXd> Jf;
  for (const auto& f : holo) Jf.push_back(J.apply(f));
  LabeledBasis b;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      push(b, 0.5 * (odot(holo[i], holo[j]) + odot(Jf[i], Jf[j])),
           BasisKind::PhiMinus, i + 1, j + 1);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      push(b, 0.5 * (odot(holo[i], Jf[j]) - odot(Jf[i], holo[j])),
           BasisKind::PsiMinus, i + 1, j + 1);
  for (int r = 1; r < k; ++r) {
    SymTwoTensor t =
        static_cast<double>(r) *
        (odot(holo[r], holo[r]) + odot(Jf[r], Jf[r]));
    for (int i = 0; i < r; ++i) t -= odot(holo[i], holo[i]) + odot(Jf[i], Jf[i]);
    push(b, (1.0 / std::sqrt(8.0 * r * (r + 1))) * t, BasisKind::Eta, r);
  }
  return b;
}

LabeledBasis build_kahler_basis(const ComplexStructure& J,
                                const UnitaryFrame& frame) {
  if (frame.m != J.m())
    throw std::invalid_argument("build_kahler_basis: dimension mismatch");
  LabeledBasis b = build_e_plus(J, frame.holo());
  b.append(build_e_minus(J, frame.holo()));
  return b;
}

LabeledBasis build_product_basis(const ComplexStructure& J,
                                 const UnitaryFrame& frame) {
  if (frame.m != J.m())
    throw std::invalid_argument("build_product_basis: dimension mismatch");
  if (frame.m < 2)
    throw std::invalid_argument(
        "build_product_basis: needs complex dimension >= 2");
  const int mm = frame.m - 1;
  const Eigen::VectorXd& f0 = frame.f[0];
  Eigen::VectorXd Jf0 = J.apply(f0);
  std::vector<Eigen::VectorXd> v1(frame.f.begin() + 1, frame.f.begin() + 1 + mm);

  LabeledBasis b = build_e_plus(J, v1);
  b.append(build_e_minus(J, v1));
  push(b, (0.5 * kInvSqrt2) * (odot(f0, f0) - odot(Jf0, Jf0)), BasisKind::Tau, 1);
  push(b, kInvSqrt2 * odot(f0, Jf0), BasisKind::Tau, 2);
  for (int a = 0; a < 2; ++a) {
    const Eigen::VectorXd& v0 = (a == 0) ? f0 : Jf0;
    for (int i = 0; i < mm; ++i) {
      push(b, kInvSqrt2 * odot(v0, v1[i]), BasisKind::Mixed, a + 1, i + 1);
      push(b, kInvSqrt2 * odot(v0, J.apply(v1[i])), BasisKind::Mixed, a + 1,
           mm + i + 1);
    }
  }
  SymTwoTensor z = static_cast<double>(mm) * (odot(f0, f0) + odot(Jf0, Jf0));
  for (int i = 0; i < mm; ++i) {
    Eigen::VectorXd Jfi = J.apply(v1[i]);
    z -= odot(v1[i], v1[i]) + odot(Jfi, Jfi);
  }
  push(b, (1.0 / std::sqrt(8.0 * mm * (mm + 1))) * z, BasisKind::Zeta, 1);
  return b;
}

LabeledBasis standard_traceless_basis(int n) {
  if (n < 2)
    throw std::invalid_argument("standard_traceless_basis: needs n >= 2");
  auto e = [n](int i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v[i] = 1.0;
    return v;
  };
  LabeledBasis b;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      push(b, kInvSqrt2 * odot(e(i), e(j)), BasisKind::OffDiag, i + 1, j + 1);
  for (int r = 1; r < n; ++r) {
    SymTwoTensor t = static_cast<double>(r) * odot(e(r), e(r));
    for (int i = 0; i < r; ++i) t -= odot(e(i), e(i));
    push(b, (1.0 / (2.0 * std::sqrt(static_cast<double>(r) * (r + 1)))) * t,
         BasisKind::Diag, r);
  }
  return b;
}

std::vector<double> diag_values(const CurvatureTensor& R,
                                const LabeledBasis& basis) {
  std::vector<double> out;
  out.reserve(basis.size());
  for (const auto& e : basis.elems) out.push_back(ring(R, e, e));
  return out;
}

EtaSumDecomposition eta_sum_decomposition(const KahlerOperator& op,
                                          const UnitaryFrame& frame) {
  const int m = frame.m;
  LabeledBasis eminus = build_e_minus(op.J(), frame.holo());
  EtaSumDecomposition out;
  for (int a = 0; a < eminus.size(); ++a)
    if (eminus.labels[a].kind == BasisKind::Eta)
      out.lhs += ring(op.R(), eminus.elems[a], eminus.elems[a]);
  out.a_coeff = -(m - 1.0) / m;
  out.b_coeff = 2.0 / m;
  double hsum = 0.0, bsum = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      double bis = op.R().eval(frame.f[i], frame.f[m + i], frame.f[j],
                               frame.f[m + j]);
      if (i == j)
        hsum += bis;
      else
        bsum += bis;
    }
  out.rhs = out.a_coeff * hsum + out.b_coeff * bsum;
  return out;
}

std::pair<double, double> iiJiJi_identity(const KahlerOperator& op,
                                          const UnitaryFrame& frame, int i,
                                          int j) {
  const int m = frame.m;
  if (i < 0 || j < 0 || i >= m || j >= m)
    throw std::out_of_range("iiJiJi_identity: index out of range");
  SymTwoTensor Xi = SymTwoTensor::sym_product(frame.f[i], frame.f[i]) +
                    SymTwoTensor::sym_product(frame.f[m + i], frame.f[m + i]);
  SymTwoTensor Xj = SymTwoTensor::sym_product(frame.f[j], frame.f[j]) +
                    SymTwoTensor::sym_product(frame.f[m + j], frame.f[m + j]);
  double lhs = ring(op.R(), Xi, Xj);
  double rhs = -8.0 * op.R().eval(frame.f[i], frame.f[m + i], frame.f[j],
                                  frame.f[m + j]);
  return {lhs, rhs};
}

}  // namespace cosk
