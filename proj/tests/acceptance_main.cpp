// Acceptance battery: thirteen end-to-end criteria, one PASS/FAIL line each.
// Exits nonzero when any criterion fails.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cosk/basis.hpp"
#include "cosk/lab.hpp"
#include "cosk/models.hpp"
#include "cosk/spectral.hpp"
#include "cosk/util.hpp"

using namespace cosk;

namespace {

int g_failures = 0;

void report(int num, const std::string& what, bool ok,
            const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

template <typename Fn>
void criterion(int num, const std::string& what, Fn fn) {
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail.str("");
    detail << "exception: " << e.what();
  }
  report(num, what, ok, detail.str());
}

double bisec(const KahlerOperator& op, const UnitaryFrame& fr, int i, int j) {
  int m = fr.m;
  return op.R().eval(fr.f[i], fr.f[m + i], fr.f[j], fr.f[m + j]);
}

std::vector<double> to_vec(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

// Frobenius inner product over the full n^4 coefficient array.
double tensor_dot(const CurvatureTensor& A, const CurvatureTensor& B) {
  const int n = A.dim();
  double s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += A(i, j, k, l) * B(i, j, k, l);
  return s;
}

bool spectrum_matches(const Eigen::VectorXd& eigs,
                      const std::vector<double>& expected, double tol,
                      double* worst) {
  if (eigs.size() != static_cast<Eigen::Index>(expected.size())) return false;
  bool ok = true;
  for (Eigen::Index a = 0; a < eigs.size(); ++a) {
    double dev = std::abs(eigs[a] - expected[a]);
    *worst = std::max(*worst, dev);
    ok = ok && dev <= tol;
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "constant-HSC spectra {-2 x (m^2-1), 4 x m(m+1)} and "
               "thresholds 3(m^2-1)/2 at m = 2, 3, 4",
            [](std::ostringstream& d) {
    bool ok = true;
    double worst = 0;
    for (int m : {2, 3, 4}) {
      KahlerOperator op = const_hsc(m, 4.0);
      Eigen::VectorXd eigs = eigenvalues(assemble(op.R()));
      const int neg = m * m - 1;
      const int pos = m * (m + 1);
      ok = ok && eigs.size() == neg + pos;
      std::vector<double> expected;
      expected.insert(expected.end(), neg, -2.0);
      expected.insert(expected.end(), pos, 4.0);
      ok = spectrum_matches(eigs, expected, 1e-8, &worst) && ok;
      Threshold th = alpha_threshold(eigs);
      ok = ok && th.attained;
      double dev = std::abs(th.alpha - 1.5 * (m * m - 1));
      worst = std::max(worst, dev);
      ok = ok && dev <= 1e-8;
    }
    d << "worst deviation " << worst;
    return ok;
  });

  criterion(2, "sphere(2,1) x line: spectrum {-1/3, 0, 0, 1, 1}, "
               "threshold 10/3",
            [](std::ostringstream& d) {
    CurvatureTensor R = product(sphere(2, 1.0), flat(1));
    Eigen::VectorXd eigs = eigenvalues(assemble(R));
    double worst = 0;
    bool ok = spectrum_matches(eigs, {-1.0 / 3.0, 0.0, 0.0, 1.0, 1.0}, 1e-9,
                               &worst);
    Threshold th = alpha_threshold(eigs);
    double dev = std::abs(th.alpha - 10.0 / 3.0);
    worst = std::max(worst, dev);
    ok = ok && th.attained && dev <= 1e-9;
    d << "worst deviation " << worst;
    return ok;
  });

  criterion(3, "product of two lines with HSC 4: spectrum {-4, 0 x 4, 4 x 4}, "
               "threshold 6",
            [](std::ostringstream& d) {
    KahlerOperator op = kahler_product(const_hsc(1, 4.0), const_hsc(1, 4.0));
    Eigen::VectorXd eigs = eigenvalues(assemble(op.R()));
    double worst = 0;
    bool ok = spectrum_matches(
        eigs, {-4.0, 0.0, 0.0, 0.0, 0.0, 4.0, 4.0, 4.0, 4.0}, 1e-9, &worst);
    Threshold th = alpha_threshold(eigs);
    double dev = std::abs(th.alpha - 6.0);
    worst = std::max(worst, dev);
    ok = ok && th.attained && dev <= 1e-9;
    d << "worst deviation " << worst;
    return ok;
  });

  criterion(4, "trace identity tr = (n+2)/(2n) S across the model zoo and "
               "50 random draws",
            [](std::ostringstream& d) {
    std::vector<CurvatureTensor> zoo = {
        const_hsc(2, 4.0).R(),
        const_hsc(3, 4.0).R(),
        sphere(3, 1.0),
        sphere(4, 2.0),
        sphere(5, 0.5),
        flat(4),
        cp_times_flat(2).R(),
        product(sphere(2, 1.0), flat(1)),
        kahler_product(const_hsc(1, 4.0), const_hsc(1, 4.0)).R(),
        kahler_product(const_hsc(2, 4.0), const_hsc(1, 4.0)).R(),
    };
    for (int t = 0; t < 20; ++t)
      zoo.push_back(random_kahler(2, sub_seed(4001, t)).R());
    for (int t = 0; t < 20; ++t)
      zoo.push_back(random_kahler(3, sub_seed(4002, t)).R());
    for (int t = 0; t < 5; ++t)
      zoo.push_back(random_algebraic(4, sub_seed(4003, t)));
    for (int t = 0; t < 5; ++t)
      zoo.push_back(random_algebraic(5, sub_seed(4004, t)));
    bool ok = true;
    double worst = 0;
    for (const CurvatureTensor& R : zoo) {
      SecondKindMatrix M = assemble(R);
      const int n = R.dim();
      double lhs = M.M.trace();
      double rhs = (n + 2.0) / (2.0 * n) * M.scalar;
      double rel = std::abs(lhs - rhs) / scale_of(R);
      worst = std::max(worst, rel);
      ok = ok && rel <= 1e-9;
    }
    d << zoo.size() << " tensors, worst relative residual " << worst;
    return ok;
  });

  criterion(5, "adapted bases: dimensions m(m+1) + (m^2-1), orthonormality, "
               "diagonal sums S and -(m-1)/(2m) S over 50 draws x 5 frames",
            [](std::ostringstream& d) {
    bool ok = true;
    double worst = 0;
    for (int m : {2, 3}) {
      for (int t = 0; t < 25; ++t) {
        KahlerOperator op = random_kahler(m, sub_seed(5000 + m, t));
        const double tol = 1e-9 * scale_of(op.R());
        for (int k = 0; k < 5; ++k) {
          UnitaryFrame fr =
              (k == 0) ? UnitaryFrame::standard(m)
                       : random_unitary_frame(m, sub_seed(5100 + m, 5 * t + k));
          LabeledBasis ep = build_e_plus(op.J(), fr.holo());
          LabeledBasis em = build_e_minus(op.J(), fr.holo());
          ok = ok && ep.size() == m * (m + 1) && em.size() == m * m - 1;
          LabeledBasis full = build_kahler_basis(op.J(), fr);
          ok = ok && full.size() == op.R().sym_dim();
          double gram = full.gram_residual();
          worst = std::max(worst, gram);
          ok = ok && gram <= 1e-9;

          std::vector<double> dp = diag_values(op.R(), ep);
          std::vector<double> dm = diag_values(op.R(), em);
          double sp = 0, sm = 0;
          for (double v : dp) sp += v;
          for (double v : dm) sm += v;
          double devp = std::abs(sp - op.scalar());
          double devm = std::abs(sm + (m - 1.0) / (2.0 * m) * op.scalar());
          worst = std::max({worst, devp, devm});
          ok = ok && devp <= tol && devm <= tol;
        }
      }
    }
    d << "worst deviation " << worst;
    return ok;
  });

  criterion(6, "closed-form diagonals, the diagonal-pair identity, and the "
               "eta-sum decomposition",
            [](std::ostringstream& d) {
    bool ok = true;
    double worst_rel = 0;
    for (int m : {2, 3}) {
      std::vector<KahlerOperator> ops = {const_hsc(m, 4.0),
                                         random_kahler(m, 60 + m)};
      for (std::size_t oi = 0; oi < ops.size(); ++oi) {
        const KahlerOperator& op = ops[oi];
        const double scale = scale_of(op.R());
        for (int k = 0; k < 2; ++k) {
          UnitaryFrame fr = (k == 0)
                                ? UnitaryFrame::standard(m)
                                : random_unitary_frame(
                                      m, sub_seed(600 + m, 10 * oi + k));
          LabeledBasis basis = build_kahler_basis(op.J(), fr);
          std::vector<double> diag = diag_values(op.R(), basis);
          auto track = [&](double lhs, double rhs) {
            double rel = std::abs(lhs - rhs) / scale;
            worst_rel = std::max(worst_rel, rel);
            ok = ok && rel <= 1e-10;
          };
          for (int a = 0; a < basis.size(); ++a) {
            const BasisLabel& l = basis.labels[a];
            int i = l.i - 1, j = l.j - 1;
            switch (l.kind) {
              case BasisKind::PhiPlus:
              case BasisKind::PsiPlus:
                track(diag[a], 2.0 * bisec(op, fr, i, j));
                break;
              case BasisKind::Theta: {
                int h = (l.i <= m) ? i : l.i - m - 1;
                track(diag[a], bisec(op, fr, h, h));
                break;
              }
              case BasisKind::PhiMinus:
                track(diag[a], -2.0 * op.R().eval(fr.f[i], fr.f[m + j],
                                                  fr.f[i], fr.f[m + j]));
                break;
              case BasisKind::PsiMinus:
                track(diag[a], -2.0 * op.R().eval(fr.f[i], fr.f[j], fr.f[i],
                                                  fr.f[j]));
                break;
              case BasisKind::Eta:
                break;
              default:
                ok = false;
            }
          }
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
              if (i == j) continue;
              auto [lhs, rhs] = iiJiJi_identity(op, fr, i, j);
              track(lhs, rhs);
              track(rhs, -8.0 * bisec(op, fr, i, j));
            }
          EtaSumDecomposition eta = eta_sum_decomposition(op, fr);
          ok = ok && eta.a_coeff == -(m - 1.0) / m && eta.b_coeff == 2.0 / m;
          track(eta.lhs, eta.rhs);
        }
      }
    }
    d << "worst relative residual " << worst_rel;
    return ok;
  });

  criterion(7, "weighted partial sums never exceed x times the mean "
               "(1000 multisets x 20 points), with equality exactly for "
               "constant values",
            [](std::ostringstream& d) {
    Rng rng(sub_seed(7007, 0));
    bool ok = true;
    double worst_excess = -1e300;
    for (int t = 0; t < 1000; ++t) {
      int N = 2 + static_cast<int>(rng.uniform() * 11.0);
      std::vector<double> A(N);
      double sum = 0, peak = 0;
      for (double& v : A) {
        v = 3.0 * rng.gaussian();
        sum += v;
        peak = std::max(peak, std::abs(v));
      }
      const double mean = sum / N;
      for (int k = 0; k < 20; ++k) {
        double x = rng.uniform() * N;
        double excess = f_partial(A, x) - x * mean;
        worst_excess = std::max(worst_excess, excess);
        ok = ok && excess <= 1e-9 * (1.0 + peak);
      }
    }
    std::vector<double> C(7, 1.7);
    for (double x : {0.0, 1.0, 2.5, 3.3, 7.0})
      ok = ok && std::abs(f_partial(C, x) - 1.7 * x) <= 1e-12;
    std::vector<double> Cp = C;
    Cp[3] += 1e-3;
    const double mean_p = (7.0 * 1.7 + 1e-3) / 7.0;
    for (double x : {0.5, 1.0, 3.5, 6.5})
      ok = ok && f_partial(Cp, x) < x * mean_p - 1e-5;
    d << "max excess " << worst_excess;
    return ok;
  });

  criterion(8, "weighted diagonal sums over 600 orthonormal bases never "
               "undercut the eigenvalue partial sum",
            [](std::ostringstream& d) {
    std::vector<CurvatureTensor> ops = {
        const_hsc(2, 4.0).R(),
        sphere(4, 1.0),
        flat(4),
        kahler_product(const_hsc(1, 4.0), const_hsc(1, 4.0)).R(),
        cp_times_flat(1).R(),
    };
    for (int t = 0; t < 20; ++t)
      ops.push_back(random_kahler(2, sub_seed(8001, t)).R());
    bool ok = true;
    double worst_slack = 0;
    int bases = 0;
    int idx = 0;
    for (const CurvatureTensor& R : ops) {
      SecondKindMatrix M = assemble(R);
      Eigen::VectorXd eigs = eigenvalues(M);
      const double scale = 1.0 + eigs.cwiseAbs().maxCoeff();
      for (double alpha : {2.0, 4.5, 6.0, 9.0}) {
        double probe = basis_probe_min(M, alpha, 5, sub_seed(8008, idx++));
        double f = f_partial(to_vec(eigs), alpha);
        bases += 6;  // eigenbasis + 5 random rotations
        worst_slack = std::max(worst_slack, std::abs(probe - f));
        ok = ok && probe >= f - 1e-9 * scale && probe <= f + 1e-9 * scale;
      }
    }
    d << bases << " bases, worst |probe - f| " << worst_slack;
    return ok;
  });

  criterion(9, "all five diagonal-average identity chains over the zoo and "
               "50 random draws per dimension; exact rational threshold "
               "constants",
            [](std::ostringstream& d) {
    bool ok = true;
    double worst = -1e300;  // max over checks of residual minus tolerance
    int chains = 0;
    for (int m : {2, 3}) {
      std::vector<KahlerOperator> ops = {
          const_hsc(m, 4.0), cp_times_flat(m - 1),
          (m == 2) ? kahler_product(const_hsc(1, 4.0), const_hsc(1, 4.0))
                   : kahler_product(const_hsc(2, 4.0), const_hsc(1, 4.0))};
      for (int t = 0; t < 50; ++t)
        ops.push_back(random_kahler(m, sub_seed(9000 + m, t)));
      for (std::size_t oi = 0; oi < ops.size(); ++oi) {
        const KahlerOperator& op = ops[oi];
        for (int k = 0; k < 2; ++k) {
          UnitaryFrame fr =
              (k == 0) ? UnitaryFrame::standard(m)
                       : random_unitary_frame(m, sub_seed(9100 + m, oi));
          for (const VerificationReport& rep :
               {identity_chain_flat(op, fr), identity_chain_ob(op, fr),
                identity_chain_h(op, fr), identity_chain_ric_perp(op, fr),
                identity_chain_mixed(op, fr)}) {
            ++chains;
            ok = ok && rep.all_pass();
            for (const CheckRecord& c : rep.checks)
              worst = std::max(worst, c.residual - c.tol);
          }
        }
      }
    }
    for (int m = 2; m <= 10; ++m)
      ok = ok && threshold_constants(m).decompositions_exact;
    ThresholdConstants t2 = threshold_constants(2);
    ThresholdConstants t3 = threshold_constants(3);
    ok = ok && t2.alpha_m == Rat(6) && t3.alpha_m == Rat(40, 3);
    ok = ok && t2.beta_m == Rat(6) && t3.beta_m == Rat(44, 3);
    ok = ok && t2.gamma_m == Rat(15, 2) && t2.beta_tilde == Rat(44, 3);
    ok = ok && t2.gamma_tilde == Rat(16) && t2.cp_threshold == Rat(9, 2);
    ok = ok && t3.cp_threshold == Rat(12) && t2.N_at_2m == Rat(9);
    d << chains << " chains, worst margin " << worst;
    return ok;
  });

  criterion(10, "shifted-family implications: borderline contrapositive over "
                "50 tensors; weight constants alpha_m, beta_m, gamma_m force "
                "the sampled curvature signs (20 trials x 2000 samples)",
            [](std::ostringstream& d) {
    bool ok = true;
    int checks = 0;
    double worst = -1e300;
    for (int m : {2, 3}) {
      std::vector<VerificationReport> reps;
      reps.push_back(implication_suite(m, 1, 25, 200, 101));
      for (int part = 2; part <= 4; ++part)
        reps.push_back(implication_suite(m, part, 20, 2000, 100 + part));
      for (const VerificationReport& r : reps) {
        ok = ok && r.all_pass();
        checks += static_cast<int>(r.checks.size());
        for (const CheckRecord& c : r.checks)
          worst = std::max(worst, c.residual);
      }
    }
    d << checks << " checks, worst signed residual " << worst;
    return ok;
  });

  criterion(11, "product models: the line factor carries the flat "
                "Ric-perp direction; the scaled-product scan bottoms out at "
                "beta_3 = 44/3",
            [](std::ostringstream& d) {
    bool ok = true;
    std::ostringstream note;
    for (int m : {3, 4}) {
      KahlerOperator prod =
          kahler_product(const_hsc(m - 1, 4.0), const_hsc(1, 4.0));
      FunctionalReport rep =
          functional_extremes(prod, Functional::RicPerp, 2000, 111);
      ok = ok && std::abs(rep.min_value) <= 1e-6;
      // the line factor occupies holomorphic slot m-1 and its image m+(m-1)
      const Eigen::VectorXd& X = rep.argmin;
      double proj = X[m - 1] * X[m - 1] + X[2 * m - 1] * X[2 * m - 1];
      ok = ok && proj >= 0.99;
      note << "m=" << m << " min " << rep.min_value << " proj " << proj
           << "; ";
    }
    ScanResult scan = scaled_product_scan(3);
    double dev = std::abs(scan.min_threshold - 44.0 / 3.0);
    ok = ok && dev <= 1e-6;
    note << "scan min " << scan.min_threshold << " at ratio "
         << scan.min_ratio;
    d << note.str();
    return ok;
  });

  criterion(12, "full-weight nonnegativity is equivalent to nonnegative "
                "scalar curvature along scalar-flat shifts",
            [](std::ostringstream& d) {
    bool ok = true;
    double worst_interior = -1e300;
    for (int m : {2, 3}) {
      KahlerOperator cp = const_hsc(m, 4.0);
      const double s_cp = cp.scalar();
      for (int t = 0; t < 5; ++t) {
        KahlerOperator draw = random_kahler(m, sub_seed(12000 + m, t));
        CurvatureTensor R0 = draw.R() - (draw.scalar() / s_cp) * cp.R();
        SecondKindMatrix M0 = assemble(R0);
        const double scale = scale_of(R0);
        ok = ok && std::abs(M0.scalar) <= 1e-8 * scale;
        Eigen::VectorXd eigs = eigenvalues(M0);
        std::vector<double> v = to_vec(eigs);
        const double N = static_cast<double>(v.size());
        ok = ok && std::abs(f_partial(v, N)) <= 1e-8 * scale;
        for (double alpha : {1.0, N / 4.0, N / 2.0, 3.0 * N / 4.0, N - 0.5}) {
          double f = f_partial(v, alpha);
          worst_interior = std::max(worst_interior, f);
          ok = ok && f < -1e-6;  // strictly negative short of full weight
        }
        Threshold th0 = alpha_threshold(eigs);
        ok = ok && th0.attained && std::abs(th0.alpha - N) <= 1e-6;
        Threshold thp =
            alpha_threshold(eigenvalues(assemble(R0 + 0.1 * cp.R())));
        Threshold thm =
            alpha_threshold(eigenvalues(assemble(R0 - 0.1 * cp.R())));
        ok = ok && thp.attained && !thm.attained;
      }
    }
    d << "worst interior partial sum " << worst_interior;
    return ok;
  });

  criterion(13, "constraint-solver dimensions (m(m+1)/2)^2 and "
                "n^2(n^2-1)/12, orthonormal residual-free elements, "
                "deterministic draws",
            [](std::ostringstream& d) {
    bool ok = true;
    double worst = 0;
    for (int m : {2, 3, 4}) {
      const KahlerSubspace& ks = kahler_subspace(m);
      int expect = (m * (m + 1) / 2) * (m * (m + 1) / 2);
      ok = ok && static_cast<int>(ks.basis.size()) == expect;
      for (std::size_t idx : {std::size_t{0}, ks.basis.size() / 2,
                              ks.basis.size() - 1}) {
        const CurvatureTensor& B = ks.basis[idx];
        worst = std::max({worst, bianchi_residual(B), kahler_residual(B)});
        ok = ok && bianchi_residual(B) <= 1e-10 &&
             kahler_residual(B) <= 1e-10;
        double norm_dev = std::abs(tensor_dot(B, B) - 1.0);
        worst = std::max(worst, norm_dev);
        ok = ok && norm_dev <= 1e-8;
      }
      double cross = std::abs(tensor_dot(ks.basis.front(), ks.basis.back()));
      worst = std::max(worst, cross);
      ok = ok && cross <= 1e-8;
    }
    for (int n : {4, 5}) {
      const AlgebraicSubspace& as = algebraic_subspace(n);
      int expect = n * n * (n * n - 1) / 12;
      ok = ok && static_cast<int>(as.basis.size()) == expect;
      for (std::size_t idx : {std::size_t{0}, as.basis.size() - 1}) {
        const CurvatureTensor& B = as.basis[idx];
        worst = std::max(worst, bianchi_residual(B));
        ok = ok && bianchi_residual(B) <= 1e-10;
        double norm_dev = std::abs(tensor_dot(B, B) - 1.0);
        worst = std::max(worst, norm_dev);
        ok = ok && norm_dev <= 1e-8;
      }
    }
    ok = ok &&
         (random_kahler(3, 42).R() - random_kahler(3, 42).R()).max_abs() == 0.0;
    ok = ok && (random_algebraic(5, 42) - random_algebraic(5, 42)).max_abs() ==
                   0.0;
    d << "worst residual " << worst;
    return ok;
  });

  if (g_failures == 0) {
    std::cout << "all 13 criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " criteria failed\n";
  return 1;
}
