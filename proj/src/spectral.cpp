#include "cosk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cosk/util.hpp"

namespace cosk {

SecondKindMatrix assemble(const CurvatureTensor& R, const LabeledBasis& basis) {
  const int N = R.sym_dim();
  if (basis.size() != N)
    throw std::invalid_argument(
        "assemble: basis does not span the traceless symmetric tensors");
  if (basis.gram_residual() > 1e-8)
    throw std::invalid_argument("assemble: basis is not orthonormal");
  SecondKindMatrix out;
  out.n = R.dim();
  out.labels = basis.labels;
  out.M = Eigen::MatrixXd::Zero(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      double v = ring(R, basis.elems[a], basis.elems[b]);
      out.M(a, b) = v;
      out.M(b, a) = v;
    }
  out.scalar = ricci_scalar(R).scalar;
  return out;
}

SecondKindMatrix assemble(const CurvatureTensor& R) {
  return assemble(R, standard_traceless_basis(R.dim()));
}

Eigen::VectorXd eigenvalues(const SecondKindMatrix& M) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M.M);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues: eigensolver failed");
  return solver.eigenvalues();
}

double f_partial(std::vector<double> values, double x) {
  const int N = static_cast<int>(values.size());
  if (!(x >= 0.0 && x <= static_cast<double>(N)))
    throw std::invalid_argument("f_partial: x must lie in [0, N]");
  std::sort(values.begin(), values.end());
  int k = static_cast<int>(std::floor(x));
  if (k > N) k = N;
  double sum = 0.0;
  for (int i = 0; i < k; ++i) sum += values[i];
  double frac = x - k;
  if (frac > 0.0 && k < N) sum += frac * values[k];
  return sum;
}

const char* verdict_name(AlphaVerdict v) {
  switch (v) {
    case AlphaVerdict::Positive:
      return "positive";
    case AlphaVerdict::Nonnegative:
      return "nonnegative";
    case AlphaVerdict::Indefinite:
      return "indefinite";
    case AlphaVerdict::Nonpositive:
      return "nonpositive";
    case AlphaVerdict::Negative:
      return "negative";
    case AlphaVerdict::Zero:
      return "zero";
  }
  return "unknown";
}

AlphaStatus alpha_status(const Eigen::VectorXd& eigs_ascending, double alpha,
                         double tol) {
  const int N = static_cast<int>(eigs_ascending.size());
  std::vector<double> pos(N), neg(N);
  double peak = 0.0;
  for (int i = 0; i < N; ++i) {
    pos[i] = eigs_ascending[i];
    neg[i] = -eigs_ascending[i];
    peak = std::max(peak, std::abs(eigs_ascending[i]));
  }
  AlphaStatus st;
  st.alpha = alpha;
  st.tol = tol;
  st.f_pos = f_partial(pos, alpha);
  st.f_neg = f_partial(neg, alpha);
  const double eps = tol * (1.0 + peak);
  if (peak <= eps)
    st.verdict = AlphaVerdict::Zero;
  else if (st.f_pos > eps)
    st.verdict = AlphaVerdict::Positive;
  else if (st.f_neg > eps)
    st.verdict = AlphaVerdict::Negative;
  else if (st.f_pos >= -eps)
    st.verdict = AlphaVerdict::Nonnegative;
  else if (st.f_neg >= -eps)
    st.verdict = AlphaVerdict::Nonpositive;
  else
    st.verdict = AlphaVerdict::Indefinite;
  return st;
}

Threshold alpha_threshold(const Eigen::VectorXd& eigs_ascending, double tol) {
  const int N = static_cast<int>(eigs_ascending.size());
  if (N < 1) throw std::invalid_argument("alpha_threshold: empty spectrum");
  std::vector<double> v(eigs_ascending.data(), eigs_ascending.data() + N);
  std::sort(v.begin(), v.end());
  double peak = 0.0;
  for (double e : v) peak = std::max(peak, std::abs(e));
  const double eps = tol * (1.0 + peak);

  Threshold out;
  double prefix = 0.0;
  for (int k = 1; k <= N; ++k) {
    double prev = prefix;
    prefix += v[k - 1];
    if (prefix >= -eps) {
      // the partial sum turns nonnegative inside segment (k-1, k]
      double root;
      if (prev >= 0.0)
        root = static_cast<double>(k - 1);
      else if (v[k - 1] > 0.0)
        root = (k - 1) + (-prev) / v[k - 1];
      else
        root = static_cast<double>(k);
      out.attained = true;
      out.alpha = std::min(std::max(root, 1.0), static_cast<double>(N));
      return out;
    }
  }
  out.attained = false;
  out.alpha = 0.0;
  return out;
}

double basis_probe_min(const SecondKindMatrix& M, double alpha, int trials,
                       std::uint64_t seed) {
  const int N = static_cast<int>(M.M.rows());
  auto weighted_diag = [&](const Eigen::MatrixXd& Q) {
    std::vector<double> d(N);
    for (int a = 0; a < N; ++a) d[a] = Q.col(a).dot(M.M * Q.col(a));
    return f_partial(std::move(d), alpha);
  };
  // the eigenbasis realizes f(eigs, alpha) itself
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M.M);
  double best = weighted_diag(solver.eigenvectors());
  for (int t = 0; t < trials; ++t) {
    Rng rng(sub_seed(seed, static_cast<std::uint64_t>(t)));
    Eigen::MatrixXd G(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) G(i, j) = rng.gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
    Eigen::MatrixXd Q = qr.householderQ();
    best = std::min(best, weighted_diag(Q));
  }
  return best;
}

double to_double(const Rat& r) { return boost::rational_cast<double>(r); }

ThresholdConstants threshold_constants(int m) {
  if (m < 2)
    throw std::invalid_argument("threshold_constants: needs m >= 2");
  const long long M = m;
  ThresholdConstants c;
  c.m = m;
  c.alpha_m = Rat(3 * M * M * M - M + 2, 2 * M);
  c.beta_m = Rat(3 * M * M * M + 2 * M * M - 3 * M - 2, 2 * M);
  c.gamma_m = Rat(3 * M * M + 2 * M - 1, 2);
  c.beta_tilde = Rat(M * (M + 2) * (3 * M + 5), 2 * (M + 1));
  c.gamma_tilde = Rat(3 * M * M + 8 * M + 4, 2);
  c.cp_threshold = Rat(3 * (M * M - 1), 2);
  c.N_at_2m = Rat((2 * M - 1) * (M + 1));

  // bookkeeping identities, all in exact rational arithmetic
  bool ok = true;
  ok = ok && c.alpha_m == Rat(M * M - 1) + Rat(2) + Rat(M - 1) +
                 Rat((M - 2) * (M * M - 1), 2 * M);
  ok = ok && c.alpha_m == Rat(M * M - 1) + Rat(2) +
                 Rat((M - 1) * (M - 1) * (M + 2), 2 * M);
  ok = ok && c.beta_tilde == Rat(M * M - 1) + Rat(4 * M + 1) +
                 Rat(M * (M * M + M + 2), 2 * (M + 1));
  ok = ok && c.gamma_tilde == Rat(M * M - 1) + Rat(4 * M + 3) + Rat(M * M, 2);
  // the tilde constants are the plain constants one dimension up
  const long long P = M + 1;
  ok = ok && c.beta_tilde == Rat(3 * P * P * P + 2 * P * P - 3 * P - 2, 2 * P);
  ok = ok && c.gamma_tilde == Rat(3 * P * P + 2 * P - 1, 2);
  c.decompositions_exact = ok;
  return c;
}

}  // namespace cosk
