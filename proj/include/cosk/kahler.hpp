#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cosk/complex_structure.hpp"
#include "cosk/curvature.hpp"

namespace cosk {

class KahlerError : public std::runtime_error {
 public:
  KahlerError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// max over basis quadruples of |R(ei,ej,ek,el) - R(ei,ej,J ek,J el)| with the
// standard adapted J.  Requires even n.
double kahler_residual(const CurvatureTensor& R);

// A curvature tensor validated against the standard complex structure:
// both the first Bianchi residual and the J-invariance residual are
// <= tol * scale at construction.  Ricci and scalar curvature are cached.
class KahlerOperator {
 public:
  static KahlerOperator checked(CurvatureTensor R, double tol = 1e-10);

  const CurvatureTensor& R() const { return R_; }
  const ComplexStructure& J() const { return J_; }
  int m() const { return J_.m(); }
  int n() const { return J_.n(); }
  double residual() const { return residual_; }
  const Eigen::MatrixXd& ricci() const { return ricci_; }
  double scalar() const { return scalar_; }

 private:
  KahlerOperator(CurvatureTensor R, ComplexStructure J, double residual);
  CurvatureTensor R_;
  ComplexStructure J_;
  double residual_;
  Eigen::MatrixXd ricci_;
  double scalar_ = 0;
};

// Holomorphic sectional curvature R(X, JX, X, JX); X must be unit to 1e-10.
double hsc(const KahlerOperator& op, const Eigen::VectorXd& X);

// Orthogonal bisectional curvature R(X, JX, Y, JY); requires |X| = |Y| = 1,
// g(X, Y) = 0 and g(X, JY) = 0, each to 1e-10.
double orth_bisec(const KahlerOperator& op, const Eigen::VectorXd& X,
                  const Eigen::VectorXd& Y);

// Ric(X, X) - R(X, JX, X, JX) for unit X.
double ric_perp(const KahlerOperator& op, const Eigen::VectorXd& X);

// a Ric(X, X) + b R(X, JX, X, JX) for unit X.
double mixed_c(const KahlerOperator& op, double a, double b,
               const Eigen::VectorXd& X);

// Ricci via the trace identity Ric(X, Y) = sum_i R(X, JY, e_i, J e_i) over
// the first half of the standard adapted frame.  Agrees with the double
// trace for J-invariant tensors.
Eigen::MatrixXd kahler_ricci(const CurvatureTensor& R);

// Unitary frame {f_0 .. f_{2m-1}} of R^{2m} with f_{m+i} = J f_i exactly.
struct UnitaryFrame {
  int m = 0;
  std::vector<Eigen::VectorXd> f;

  static UnitaryFrame standard(int m);
  std::vector<Eigen::VectorXd> holo() const;  // first m vectors
  // max deviation from orthonormality and from f_{m+i} = J f_i.
  double residual() const;
};

UnitaryFrame random_unitary_frame(int m, std::uint64_t seed);

enum class Functional { Hsc, OrthBisec, RicPerp, MixedC21 };
const char* functional_name(Functional f);

struct FunctionalReport {
  Functional id = Functional::Hsc;
  double min_value = 0;
  double max_value = 0;
  Eigen::VectorXd argmin, argmax;  // OrthBisec: [X; Y] stacked
  int samples = 0;
  std::uint64_t seed = 0;
};

// Deterministic sampled extremes over `samples` random admissible inputs plus
// the canonical coordinate seeds; the most promising starts on each side are
// refined by 20 projected gradient steps with step length 0.1 / (1 + iter).
FunctionalReport functional_extremes(const KahlerOperator& op, Functional f,
                                     int samples, std::uint64_t seed);

}  // namespace cosk
