#include "cosk/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "cosk/basis.hpp"
#include "cosk/util.hpp"

namespace cosk {

bool VerificationReport::all_pass() const {
  for (const CheckRecord& c : checks)
    if (!c.pass) return false;
  return true;
}

CheckRecord& VerificationReport::add_eq(const std::string& name, double lhs,
                                        double rhs, double tol) {
  CheckRecord c;
  c.name = name;
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = std::abs(lhs - rhs);
  c.tol = tol;
  c.pass = c.residual <= tol;
  checks.push_back(std::move(c));
  return checks.back();
}

CheckRecord& VerificationReport::add_leq(const std::string& name, double lhs,
                                         double rhs, double tol) {
  CheckRecord c;
  c.name = name;
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = lhs - rhs;
  c.tol = tol;
  c.pass = lhs <= rhs + tol;
  checks.push_back(std::move(c));
  return checks.back();
}

CheckRecord& VerificationReport::add_flag(const std::string& name, bool pass) {
  CheckRecord c;
  c.name = name;
  c.pass = pass;
  checks.push_back(std::move(c));
  return checks.back();
}

namespace {

std::vector<double> to_vec(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

// Bisectional table over a unitary frame: b(i, j) = R(f_i, Jf_i, f_j, Jf_j);
// the diagonal entries are the holomorphic sectional curvatures.
Eigen::MatrixXd bisec_table(const KahlerOperator& op, const UnitaryFrame& fr) {
  const int m = fr.m;
  Eigen::MatrixXd b(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      b(i, j) = op.R().eval(fr.f[i], fr.f[m + i], fr.f[j], fr.f[m + j]);
  return b;
}

struct KahlerDiags {
  std::vector<double> eplus;        // phi+, psi+, theta diagonal values
  std::vector<double> theta;        // 2m values
  std::vector<double> pair_excl12;  // phi+/psi+ values without the (1,2) pair
  std::vector<double> eplus_no_t1;  // eplus minus theta_1 and theta_{m+1}
  double eplus_sum = 0, eminus_sum = 0;
  double pair_sum = 0, theta_sum = 0;
  double phi12 = 0, psi12 = 0;
  double theta1 = 0, theta_m1 = 0;
};

KahlerDiags collect_kahler_diags(const KahlerOperator& op,
                                 const UnitaryFrame& fr) {
  LabeledBasis basis = build_kahler_basis(op.J(), fr);
  std::vector<double> d = diag_values(op.R(), basis);
  const int m = op.m();
  KahlerDiags out;
  for (int a = 0; a < basis.size(); ++a) {
    const BasisLabel& l = basis.labels[static_cast<std::size_t>(a)];
    const double v = d[static_cast<std::size_t>(a)];
    switch (l.kind) {
      case BasisKind::PhiPlus:
      case BasisKind::PsiPlus:
        out.eplus.push_back(v);
        out.eplus_sum += v;
        out.pair_sum += v;
        out.eplus_no_t1.push_back(v);
        if (l.i == 1 && l.j == 2)
          (l.kind == BasisKind::PhiPlus ? out.phi12 : out.psi12) = v;
        else
          out.pair_excl12.push_back(v);
        break;
      case BasisKind::Theta:
        out.eplus.push_back(v);
        out.eplus_sum += v;
        out.theta.push_back(v);
        out.theta_sum += v;
        if (l.i == 1)
          out.theta1 = v;
        else if (l.i == m + 1)
          out.theta_m1 = v;
        else
          out.eplus_no_t1.push_back(v);
        break;
      default:  // the E- block
        out.eminus_sum += v;
        break;
    }
  }
  return out;
}

struct SplitDiags {
  std::vector<double> eplus1;  // E+(V1) diagonal values
  std::vector<double> tau;     // the two V0 spread values
  double eplus1_sum = 0, eminus1_sum = 0;
  double tau_sum = 0, mixed_sum = 0, zeta = 0;
};

SplitDiags collect_split_diags(const KahlerOperator& op,
                               const UnitaryFrame& fr) {
  LabeledBasis basis = build_product_basis(op.J(), fr);
  std::vector<double> d = diag_values(op.R(), basis);
  SplitDiags out;
  for (int a = 0; a < basis.size(); ++a) {
    const double v = d[static_cast<std::size_t>(a)];
    switch (basis.labels[static_cast<std::size_t>(a)].kind) {
      case BasisKind::PhiPlus:
      case BasisKind::PsiPlus:
      case BasisKind::Theta:
        out.eplus1.push_back(v);
        out.eplus1_sum += v;
        break;
      case BasisKind::PhiMinus:
      case BasisKind::PsiMinus:
      case BasisKind::Eta:
        out.eminus1_sum += v;
        break;
      case BasisKind::Tau:
        out.tau.push_back(v);
        out.tau_sum += v;
        break;
      case BasisKind::Mixed:
        out.mixed_sum += v;
        break;
      case BasisKind::Zeta:
        out.zeta = v;
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace

VerificationReport identity_chain_flat(const KahlerOperator& op,
                                       const UnitaryFrame& frame) {
  const int m = op.m();
  VerificationReport r;
  r.suite = "chain-flat";
  r.m = m;
  const double tol = 1e-9 * scale_of(op.R());
  const double S = op.scalar();
  KahlerDiags d = collect_kahler_diags(op, frame);

  r.add_eq("holomorphic block sum equals the scalar curvature", d.eplus_sum,
           S, tol);
  r.add_eq("antiholomorphic block sum", d.eminus_sum, -(m - 1) / (2.0 * m) * S,
           tol);
  const double x = (m * m - 1) / 2.0;
  const double abar = S / (m * (m + 1.0));
  r.add_leq("partial sum of the smallest holomorphic diagonals",
            f_partial(d.eplus, x), x * abar, tol);
  r.add_eq("scalar-curvature balance identity", d.eminus_sum + x * abar, 0.0,
           tol);
  return r;
}

VerificationReport identity_chain_ob(const KahlerOperator& op,
                                     const UnitaryFrame& frame) {
  const int m = op.m();
  if (m < 2)
    throw std::invalid_argument("identity_chain_ob: needs complex dim >= 2");
  VerificationReport r;
  r.suite = "chain-orth-bisec";
  r.m = m;
  const double tol = 1e-9 * scale_of(op.R());
  KahlerDiags d = collect_kahler_diags(op, frame);
  Eigen::MatrixXd b = bisec_table(op, frame);
  const double b12 = b(0, 1);
  double sumH = 0;
  for (int i = 0; i < m; ++i) sumH += b(i, i);
  double B = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) B += b(i, j);

  r.add_eq("diagonal-type block sum", d.theta_sum, 2.0 * sumH, tol);
  r.add_eq("paired block sum", d.pair_sum, 4.0 * B, tol);

  const double abar = sumH / m;  // average of the 2m diagonal-type values
  r.add_leq("partial sum of the smallest diagonal-type values",
            f_partial(d.theta, m - 1.0), (m - 1.0) * abar, tol);

  double lhs = d.eminus_sum + d.phi12 + d.psi12 + (m - 1.0) * abar;
  if (m >= 3) {
    const double xb = (m - 2.0) * (m * m - 1.0) / (2.0 * m);
    const double bbar = 4.0 * (B - b12) / ((m - 2.0) * (m + 1.0));
    r.add_leq("partial sum of the smallest paired values off the pinned pair",
              f_partial(d.pair_excl12, xb), xb * bbar, tol);
    lhs += xb * bbar;
  }
  r.add_eq("orthogonal-bisectional balance identity", lhs,
           2.0 * (m + 1.0) / m * b12, tol);
  return r;
}

VerificationReport identity_chain_h(const KahlerOperator& op,
                                    const UnitaryFrame& frame) {
  const int m = op.m();
  if (m < 2)
    throw std::invalid_argument("identity_chain_h: needs complex dim >= 2");
  VerificationReport r;
  r.suite = "chain-hsc";
  r.m = m;
  const double tol = 1e-9 * scale_of(op.R());
  const double S = op.scalar();
  KahlerDiags d = collect_kahler_diags(op, frame);
  Eigen::MatrixXd b = bisec_table(op, frame);
  const double H1 = b(0, 0);

  r.add_eq("first-direction diagonal-type values carry its curvature",
           d.theta1 + d.theta_m1, 2.0 * H1, tol);
  r.add_eq("reduced holomorphic block sum",
           d.eplus_sum - d.theta1 - d.theta_m1, S - 2.0 * H1, tol);

  const double x = (m - 1.0) * (m - 1.0) * (m + 2.0) / (2.0 * m);
  const double abar = (S - 2.0 * H1) / ((m - 1.0) * (m + 2.0));
  r.add_leq("partial sum of the smallest reduced values",
            f_partial(d.eplus_no_t1, x), x * abar, tol);
  r.add_eq("holomorphic-sectional balance identity",
           d.eminus_sum + d.theta1 + d.theta_m1 + x * abar,
           (m + 1.0) / m * H1, tol);
  return r;
}

VerificationReport identity_chain_ric_perp(const KahlerOperator& op,
                                           const UnitaryFrame& frame) {
  const int m = op.m();
  if (m < 2)
    throw std::invalid_argument(
        "identity_chain_ric_perp: needs complex dim >= 2");
  VerificationReport r;
  r.suite = "chain-ric-perp";
  r.m = m;
  const double tol = 1e-9 * scale_of(op.R());
  const int mm = m - 1;
  SplitDiags d = collect_split_diags(op, frame);
  Eigen::MatrixXd b = bisec_table(op, frame);
  const double H0 = b(0, 0);
  double P = 0;
  for (int i = 1; i < m; ++i) P += b(0, i);
  double Q = 0;
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) Q += b(i, j);

  r.add_eq("spread pair of the distinguished plane", d.tau_sum, 2.0 * H0, tol);
  r.add_eq("mixed block sum", d.mixed_sum, 2.0 * P, tol);
  r.add_eq("balance-direction diagonal", d.zeta,
           -static_cast<double>(mm) / (mm + 1.0) * H0 + 2.0 / (mm + 1.0) * P -
               Q / (mm * (mm + 1.0)),
           tol);
  r.add_eq("inner antiholomorphic block sum", d.eminus1_sum,
           mm >= 2 ? -(mm - 1.0) / mm * Q : 0.0, tol);
  r.add_eq("inner holomorphic block sum", d.eplus1_sum, 2.0 * Q, tol);
  r.add_eq("orthogonal Ricci curvature from the bisectional table", P,
           ric_perp(op, frame.f[0]), tol);

  std::vector<double> A = d.eplus1;
  A.insert(A.end(), d.tau.begin(), d.tau.end());
  const double x = mm * (mm * mm + mm + 2.0) / (2.0 * (mm + 1.0));
  const double abar = 2.0 * (Q + H0) / (mm * mm + mm + 2.0);
  r.add_leq("partial sum of the smallest inner and spread values",
            f_partial(A, x), x * abar, tol);
  r.add_eq("orthogonal-Ricci balance identity",
           d.eminus1_sum + d.mixed_sum + d.zeta + x * abar,
           2.0 * (mm + 2.0) / (mm + 1.0) * P, tol);
  return r;
}

VerificationReport identity_chain_mixed(const KahlerOperator& op,
                                        const UnitaryFrame& frame) {
  const int m = op.m();
  if (m < 2)
    throw std::invalid_argument(
        "identity_chain_mixed: needs complex dim >= 2");
  VerificationReport r;
  r.suite = "chain-mixed-c";
  r.m = m;
  const double tol = 1e-9 * scale_of(op.R());
  const int mm = m - 1;
  SplitDiags d = collect_split_diags(op, frame);
  Eigen::MatrixXd b = bisec_table(op, frame);
  const double H0 = b(0, 0);
  double Q = 0;
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) Q += b(i, j);
  const double ric00 = frame.f[0].dot(op.ricci() * frame.f[0]);

  r.add_eq("curvature combination at the distinguished direction",
           2.0 * ric00 - H0, mixed_c(op, 2.0, -1.0, frame.f[0]), tol);

  const double x = mm * mm / 2.0;
  const double abar = 2.0 * Q / (mm * (mm + 1.0));
  r.add_leq("partial sum of the smallest inner holomorphic values",
            f_partial(d.eplus1, x), x * abar, tol);
  r.add_eq("mixed-curvature balance identity",
           d.eminus1_sum + d.mixed_sum + d.zeta + d.tau_sum + x * abar,
           (mm + 2.0) / (mm + 1.0) * (2.0 * ric00 - H0), tol);
  return r;
}

VerificationReport implication_suite(int m, int part, int trials, int samples,
                                     std::uint64_t seed) {
  if (m < 2)
    throw std::invalid_argument("implication_suite: needs m >= 2");
  if (part < 1 || part > 4)
    throw std::invalid_argument("implication_suite: part must be 1..4");
  if (trials < 1)
    throw std::invalid_argument("implication_suite: needs trials >= 1");
  VerificationReport r;
  r.suite = "implication-part-" + std::to_string(part);
  r.m = m;
  r.seed = seed;
  r.trials = trials;

  KahlerOperator cp = const_hsc(m, 4.0);
  SecondKindMatrix Mcp = assemble(cp.R());
  ThresholdConstants tc = threshold_constants(m);
  double constant = 0;
  std::vector<Functional> conclusions;
  switch (part) {
    case 1:
      constant = to_double(tc.cp_threshold);
      break;
    case 2:
      constant = to_double(tc.alpha_m);
      conclusions = {Functional::Hsc, Functional::OrthBisec};
      break;
    case 3:
      constant = to_double(tc.beta_m);
      conclusions = {Functional::RicPerp};
      break;
    case 4:
      constant = to_double(tc.gamma_m);
      conclusions = {Functional::MixedC21};
      break;
  }

  std::vector<double> grid(64);
  for (int k = 0; k < 64; ++k)
    grid[static_cast<std::size_t>(k)] =
        1e-3 * std::pow(10.0, 6.0 * k / 63.0);

  if (part == 1) {
    // positive direction, on the borderline model itself
    Eigen::VectorXd eigs = eigenvalues(Mcp);
    AlphaStatus st = alpha_status(eigs, constant);
    r.add_flag("borderline model is nonnegative at the borderline weight",
               st.verdict == AlphaVerdict::Nonnegative ||
                   st.verdict == AlphaVerdict::Positive ||
                   st.verdict == AlphaVerdict::Zero);
    FunctionalReport h =
        functional_extremes(cp, Functional::Hsc, 200, sub_seed(seed, 0xcafe));
    const double scale = scale_of(cp.R());
    r.add_eq("borderline model has constant holomorphic sectional curvature",
             h.min_value, h.max_value, 1e-6 * scale);
    r.add_leq("borderline model has nonnegative scalar curvature", 0.0,
              cp.scalar(), 1e-9 * scale);
  }

  for (int trial = 0; trial < trials; ++trial) {
    KahlerOperator draw =
        random_kahler(m, sub_seed(seed, static_cast<std::uint64_t>(trial)));
    SecondKindMatrix M0 = assemble(draw.R());
    if (part == 1) {
      // contrapositive: no member of the shifted family has constant
      // holomorphic sectional curvature, so the weighted partial sum stays
      // strictly negative at the borderline weight on the whole grid
      double worst = -std::numeric_limits<double>::infinity();
      for (double t : grid) {
        SecondKindMatrix Mt = M0;
        Mt.M += t * Mcp.M;
        Eigen::VectorXd eigs = eigenvalues(Mt);
        const double scale_t = 1.0 + eigs.cwiseAbs().maxCoeff();
        worst = std::max(
            worst, f_partial(to_vec(eigs), constant) + 1e-8 * scale_t);
      }
      r.add_leq("shifted family stays short of the borderline weight (trial " +
                    std::to_string(trial) + ")",
                worst, 0.0, 0.0);
    } else {
      double t_star = -1.0;
      for (double t : grid) {
        SecondKindMatrix Mt = M0;
        Mt.M += t * Mcp.M;
        AlphaStatus st = alpha_status(eigenvalues(Mt), constant);
        if (st.verdict == AlphaVerdict::Positive ||
            st.verdict == AlphaVerdict::Nonnegative ||
            st.verdict == AlphaVerdict::Zero) {
          t_star = t;
          break;
        }
      }
      r.add_flag("some grid shift reaches nonnegative status (trial " +
                     std::to_string(trial) + ")",
                 t_star > 0.0);
      if (t_star > 0.0) {
        KahlerOperator shifted =
            KahlerOperator::checked(draw.R() + t_star * cp.R());
        const double scale_t = scale_of(shifted.R());
        for (Functional fn : conclusions) {
          FunctionalReport ext = functional_extremes(
              shifted, fn, samples,
              sub_seed(seed, 0x100 + static_cast<std::uint64_t>(trial)));
          r.add_leq(std::string("sampled ") + functional_name(fn) +
                        " minimum is nonnegative up to tolerance (trial " +
                        std::to_string(trial) + ")",
                    -1e-6 * scale_t, ext.min_value, 0.0);
        }
      }
    }
  }
  return r;
}

VerificationReport corollary_suite(int m, int trials, std::uint64_t seed) {
  if (m < 2)
    throw std::invalid_argument("corollary_suite: needs m >= 2");
  VerificationReport r;
  r.suite = "corollary";
  r.m = m;
  r.seed = seed;
  r.trials = trials;

  KahlerOperator cp = const_hsc(m, 4.0);
  Eigen::VectorXd eigs_cp = eigenvalues(assemble(cp.R()));
  const double top = to_double(threshold_constants(m).cp_threshold);
  std::vector<double> alphas(10);
  for (int k = 0; k < 10; ++k)
    alphas[static_cast<std::size_t>(k)] = 1.0 + (top - 1.0) * k / 9.0;

  for (double sign : {1.0, -1.0}) {
    bool never_strict = true;
    for (double a : alphas) {
      AlphaStatus st = alpha_status(sign * eigs_cp, a);
      if (st.verdict == AlphaVerdict::Positive ||
          st.verdict == AlphaVerdict::Negative)
        never_strict = false;
    }
    r.add_flag(std::string("constant-HSC multiple (sign ") +
                   (sign > 0 ? "+" : "-") +
                   ") is never strictly signed below the borderline",
               never_strict);
  }

  for (int trial = 0; trial < trials; ++trial) {
    KahlerOperator draw =
        random_kahler(m, sub_seed(seed, static_cast<std::uint64_t>(trial)));
    Eigen::VectorXd eigs = eigenvalues(assemble(draw.R()));
    bool all_indef = true;
    for (double a : alphas) {
      AlphaStatus st = alpha_status(eigs, a);
      if (st.verdict != AlphaVerdict::Indefinite) all_indef = false;
    }
    r.add_flag("generic draw is indefinite across the borderline grid (trial " +
                   std::to_string(trial) + ")",
               all_indef);
  }
  return r;
}

VerificationReport identity_suite(int m, int trials, std::uint64_t seed) {
  if (m < 2)
    throw std::invalid_argument("identity_suite: needs m >= 2");
  VerificationReport out;
  out.suite = "identities";
  out.m = m;
  out.seed = seed;
  out.trials = trials;

  auto absorb = [&out](const VerificationReport& part,
                       const std::string& prefix) {
    for (CheckRecord c : part.checks) {
      c.name = prefix + c.name;
      out.checks.push_back(std::move(c));
    }
  };
  auto run_all = [&](const KahlerOperator& op, const UnitaryFrame& fr,
                     const std::string& prefix) {
    absorb(identity_chain_flat(op, fr), prefix + "flat: ");
    absorb(identity_chain_ob(op, fr), prefix + "orth-bisec: ");
    absorb(identity_chain_h(op, fr), prefix + "hsc: ");
    absorb(identity_chain_ric_perp(op, fr), prefix + "ric-perp: ");
    absorb(identity_chain_mixed(op, fr), prefix + "mixed: ");
  };

  run_all(const_hsc(m, 4.0), UnitaryFrame::standard(m), "model/standard: ");
  for (int trial = 0; trial < trials; ++trial) {
    KahlerOperator op =
        random_kahler(m, sub_seed(seed, static_cast<std::uint64_t>(trial)));
    const std::string tag = "trial " + std::to_string(trial);
    run_all(op, UnitaryFrame::standard(m), tag + "/standard: ");
    run_all(op,
            random_unitary_frame(
                m, sub_seed(seed, 0x9000 + static_cast<std::uint64_t>(trial))),
            tag + "/random frame: ");
  }
  return out;
}

VerificationReport model_suite(int m) {
  if (m < 2)
    throw std::invalid_argument("model_suite: needs m >= 2");
  VerificationReport r;
  r.suite = "models";
  r.m = m;

  auto spectrum_dev = [](const Eigen::VectorXd& got,
                         std::vector<double> want) {
    if (got.size() != static_cast<Eigen::Index>(want.size()))
      return std::numeric_limits<double>::infinity();
    std::sort(want.begin(), want.end());
    double dev = 0;
    for (Eigen::Index i = 0; i < got.size(); ++i)
      dev = std::max(dev,
                     std::abs(got[i] - want[static_cast<std::size_t>(i)]));
    return dev;
  };

  KahlerOperator cp = const_hsc(m, 4.0);
  SecondKindMatrix M = assemble(cp.R());
  Eigen::VectorXd eigs = eigenvalues(M);
  std::vector<double> want;
  for (int i = 0; i < m * m - 1; ++i) want.push_back(-2.0);
  for (int i = 0; i < m * (m + 1); ++i) want.push_back(4.0);
  const double scale = scale_of(cp.R());
  r.add_leq("const-HSC spectrum is {-2, 4} with the frozen multiplicities",
            spectrum_dev(eigs, want), 0.0, 1e-9 * scale);
  Threshold th = alpha_threshold(eigs);
  r.add_flag("const-HSC threshold attained", th.attained);
  r.add_eq("const-HSC threshold", th.alpha, 1.5 * (m * m - 1), 1e-9);
  r.add_eq("const-HSC scalar curvature", cp.scalar(), 4.0 * m * (m + 1),
           1e-9);
  UnitaryFrame fr = random_unitary_frame(m, 0x51ee);
  r.add_eq("const-HSC holomorphic sectional curvature", hsc(cp, fr.f[0]), 4.0,
           1e-8);
  r.add_eq("const-HSC orthogonal Ricci curvature", ric_perp(cp, fr.f[0]),
           2.0 * m - 2.0, 1e-8);
  r.add_eq("const-HSC orthogonal bisectional curvature",
           orth_bisec(cp, fr.f[0], fr.f[1]), 2.0, 1e-8);
  r.add_eq("trace identity on the model", M.M.trace(),
           (2.0 * m + 2.0) / (4.0 * m) * cp.scalar(), 1e-9 * scale);

  KahlerOperator rnd = random_kahler(m, 77);
  SecondKindMatrix Mr = assemble(rnd.R());
  r.add_eq("trace identity on a random draw", Mr.M.trace(),
           (2.0 * m + 2.0) / (4.0 * m) * rnd.scalar(),
           1e-9 * scale_of(rnd.R()));

  if (m == 2) {
    CurvatureTensor sl = product(sphere(2, 1.0), flat(1));
    Eigen::VectorXd e1 = eigenvalues(assemble(sl));
    r.add_leq("sphere-times-line spectrum", spectrum_dev(e1, {-1.0 / 3.0, 0.0,
                                                              0.0, 1.0, 1.0}),
              0.0, 1e-9);
    Threshold t1 = alpha_threshold(e1);
    r.add_flag("sphere-times-line threshold attained", t1.attained);
    r.add_eq("sphere-times-line threshold", t1.alpha, 10.0 / 3.0, 1e-9);

    KahlerOperator pp = kahler_product(const_hsc(1, 4.0), const_hsc(1, 4.0));
    Eigen::VectorXd e2 = eigenvalues(assemble(pp.R()));
    r.add_leq("product-of-lines spectrum",
              spectrum_dev(e2, {-4, 0, 0, 0, 0, 4, 4, 4, 4}), 0.0, 1e-9);
    Threshold t2 = alpha_threshold(e2);
    r.add_flag("product-of-lines threshold attained", t2.attained);
    r.add_eq("product-of-lines threshold", t2.alpha, 6.0, 1e-9);
  }
  if (m == 3) {
    ScanResult s = scaled_product_scan(3);
    std::ostringstream name;
    name << "scaled product scan minimum (attained at ratio " << s.min_ratio
         << ")";
    r.add_eq(name.str(), s.min_threshold,
             to_double(threshold_constants(3).beta_m), 1e-8);
  }
  return r;
}

}  // namespace cosk
