#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cosk/kahler.hpp"

namespace cosk {

enum class BasisKind {
  PhiPlus,   // (f_i (.) f_j - Jf_i (.) Jf_j) / 2,         i < j
  PsiPlus,   // (f_i (.) Jf_j + Jf_i (.) f_j) / 2,         i < j
  Theta,     // i <= m:   (f_i (.) f_i - Jf_i (.) Jf_i) / (2 sqrt 2)
             // i >  m:   (f_{i-m} (.) Jf_{i-m}) / sqrt 2
  PhiMinus,  // (f_i (.) f_j + Jf_i (.) Jf_j) / 2,         i < j
  PsiMinus,  // (f_i (.) Jf_j - Jf_i (.) f_j) / 2,         i < j
  Eta,       // (k (f_{k+1}(.)f_{k+1} + Jf_{k+1}(.)Jf_{k+1})
             //    - sum_{i<=k} (f_i(.)f_i + Jf_i(.)Jf_i)) / sqrt(8k(k+1))
  Tau,       // the two Theta-type tensors of the distinguished plane V0
  Mixed,     // (v0 (.) w) / sqrt 2 with v0 in V0, w in V1
  Zeta,      // traceless balance between V0 and V1 diagonal parts
  OffDiag,   // (e_i (.) e_j) / sqrt 2  (plain reference basis)
  Diag,      // diagonal traceless ladder (plain reference basis)
};

struct BasisLabel {
  BasisKind kind = BasisKind::OffDiag;
  int i = 0;  // 1-based display indices
  int j = 0;
  std::string str() const;
};

struct LabeledBasis {
  std::vector<SymTwoTensor> elems;
  std::vector<BasisLabel> labels;

  int size() const { return static_cast<int>(elems.size()); }
  void append(LabeledBasis other);
  // max_{a,b} |<b_a, b_b> - delta_ab|
  double gram_residual() const;
};

// E+ / E-, built on a unitary set {h_1..h_k} (the J-images are taken
// implicitly).  Element order: PhiPlus lex, PsiPlus lex, Theta 1..2k for E+;
// PhiMinus lex, PsiMinus lex, Eta 1..k-1 for E-.
LabeledBasis build_e_plus(const ComplexStructure& J,
                          const std::vector<Eigen::VectorXd>& holo);
LabeledBasis build_e_minus(const ComplexStructure& J,
                           const std::vector<Eigen::VectorXd>& holo);

// Full basis of the traceless symmetric 2-tensors: E+ then E-.
LabeledBasis build_kahler_basis(const ComplexStructure& J,
                                const UnitaryFrame& frame);

// Basis adapted to the split V = V0 + V1 with V0 = span{f_0, J f_0}:
// E+(V1), E-(V1), Tau 1..2, Mixed 1..4(m-1), Zeta.  Frame must have complex
// dimension >= 2.
LabeledBasis build_product_basis(const ComplexStructure& J,
                                 const UnitaryFrame& frame);

// Plain reference basis of the traceless symmetric 2-tensors on R^n:
// off-diagonal pairs lex, then the diagonal traceless ladder.
LabeledBasis standard_traceless_basis(int n);

// Diagonal values of the second-kind form on the basis elements.
std::vector<double> diag_values(const CurvatureTensor& R,
                                const LabeledBasis& basis);

struct EtaSumDecomposition {
  double lhs = 0;      // sum_k form(eta_k, eta_k)
  double rhs = 0;      // a * sum_i HSC(f_i) + b * sum_{i<j} bisec(f_i, f_j)
  double a_coeff = 0;  // -(m-1)/m
  double b_coeff = 0;  // 2/m
};
EtaSumDecomposition eta_sum_decomposition(const KahlerOperator& op,
                                          const UnitaryFrame& frame);

// (lhs, rhs) of
//   form(f_i(.)f_i + Jf_i(.)Jf_i, f_j(.)f_j + Jf_j(.)Jf_j)
//     = -8 R(f_i, J f_i, f_j, J f_j),   0 <= i != j < m.
std::pair<double, double> iiJiJi_identity(const KahlerOperator& op,
                                          const UnitaryFrame& frame, int i,
                                          int j);

}  // namespace cosk
