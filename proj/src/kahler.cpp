#include "cosk/kahler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cosk/util.hpp"

namespace cosk {

Eigen::VectorXd ComplexStructure::apply(const Eigen::VectorXd& x) const {
  if (x.size() != n())
    throw std::invalid_argument("ComplexStructure::apply: dimension mismatch");
  Eigen::VectorXd out(n());
  for (int a = 0; a < n(); ++a) out[image_index(a)] = image_sign(a) * x[a];
  return out;
}

Eigen::MatrixXd ComplexStructure::matrix() const {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n(), n());
  for (int a = 0; a < n(); ++a) J(image_index(a), a) = image_sign(a);
  return J;
}

ComplexStructure::ComplexStructure(int m) : m_(m) {
  if (m < 1)
    throw std::invalid_argument("ComplexStructure: complex dimension must be >= 1");
}

double kahler_residual(const CurvatureTensor& R) {
  const int n = R.dim();
  if (n % 2 != 0)
    throw std::invalid_argument("kahler_residual: dimension must be even");
  ComplexStructure J(n / 2);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          double rotated = J.image_sign(k) * J.image_sign(l) *
                           R(i, j, J.image_index(k), J.image_index(l));
          worst = std::max(worst, std::abs(R(i, j, k, l) - rotated));
        }
  return worst;
}

KahlerOperator::KahlerOperator(CurvatureTensor R, ComplexStructure J,
                               double residual)
    : R_(std::move(R)), J_(J), residual_(residual) {
  Scalars s = ricci_scalar(R_);
  ricci_ = std::move(s.ricci);
  scalar_ = s.scalar;
}

KahlerOperator KahlerOperator::checked(CurvatureTensor R, double tol) {
  if (R.dim() % 2 != 0)
    throw KahlerError("operator dimension is odd, no adapted complex structure",
                      std::numeric_limits<double>::infinity());
  const double scale = scale_of(R);
  double bianchi = bianchi_residual(R);
  if (!(bianchi <= tol * scale))
    throw KahlerError("first Bianchi identity violated", bianchi);
  double jres = kahler_residual(R);
  if (!(jres <= tol * scale))
    throw KahlerError("curvature is not invariant under the complex structure",
                      jres);
  return KahlerOperator(std::move(R), ComplexStructure(R.dim() / 2),
                        std::max(bianchi, jres));
}

namespace {

void require_unit(const Eigen::VectorXd& X, const char* who) {
  if (std::abs(X.norm() - 1.0) > 1e-10)
    throw std::invalid_argument(std::string(who) +
                                ": argument must be a unit vector");
}

}  // namespace

double hsc(const KahlerOperator& op, const Eigen::VectorXd& X) {
  require_unit(X, "hsc");
  Eigen::VectorXd JX = op.J().apply(X);
  return op.R().eval(X, JX, X, JX);
}

double orth_bisec(const KahlerOperator& op, const Eigen::VectorXd& X,
                  const Eigen::VectorXd& Y) {
  require_unit(X, "orth_bisec");
  require_unit(Y, "orth_bisec");
  Eigen::VectorXd JX = op.J().apply(X);
  Eigen::VectorXd JY = op.J().apply(Y);
  if (std::abs(X.dot(Y)) > 1e-10)
    throw std::invalid_argument("orth_bisec: g(X,Y) must vanish");
  if (std::abs(X.dot(JY)) > 1e-10)
    throw std::invalid_argument("orth_bisec: g(X,JY) must vanish");
  return op.R().eval(X, JX, Y, JY);
}

double ric_perp(const KahlerOperator& op, const Eigen::VectorXd& X) {
  require_unit(X, "ric_perp");
  Eigen::VectorXd JX = op.J().apply(X);
  return X.dot(op.ricci() * X) - op.R().eval(X, JX, X, JX);
}

double mixed_c(const KahlerOperator& op, double a, double b,
               const Eigen::VectorXd& X) {
  require_unit(X, "mixed_c");
  Eigen::VectorXd JX = op.J().apply(X);
  return a * X.dot(op.ricci() * X) + b * op.R().eval(X, JX, X, JX);
}

Eigen::MatrixXd kahler_ricci(const CurvatureTensor& R) {
  const int n = R.dim();
  if (n % 2 != 0)
    throw std::invalid_argument("kahler_ricci: dimension must be even");
  ComplexStructure J(n / 2);
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (int i = 0; i < n / 2; ++i)
        s += R(a, J.image_index(b), i, n / 2 + i) * J.image_sign(b);
      ric(a, b) = s;
    }
  return ric;
}

UnitaryFrame UnitaryFrame::standard(int m) {
  UnitaryFrame fr;
  fr.m = m;
  for (int a = 0; a < 2 * m; ++a) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(2 * m);
    e[a] = 1.0;
    fr.f.push_back(std::move(e));
  }
  return fr;
}

std::vector<Eigen::VectorXd> UnitaryFrame::holo() const {
  return std::vector<Eigen::VectorXd>(f.begin(), f.begin() + m);
}

double UnitaryFrame::residual() const {
  ComplexStructure J(m);
  double worst = 0.0;
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * m; ++b)
      worst = std::max(worst,
                       std::abs(f[a].dot(f[b]) - (a == b ? 1.0 : 0.0)));
  for (int i = 0; i < m; ++i)
    worst = std::max(worst, (f[m + i] - J.apply(f[i])).cwiseAbs().maxCoeff());
  return worst;
}

UnitaryFrame random_unitary_frame(int m, std::uint64_t seed) {
  ComplexStructure J(m);
  Rng rng(sub_seed(seed, 0xf7a3e));
  UnitaryFrame fr;
  fr.m = m;
  fr.f.assign(2 * m, Eigen::VectorXd());
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd v(2 * m);
    while (true) {
      for (int a = 0; a < 2 * m; ++a) v[a] = rng.gaussian();
      // complex-linear orthogonalization against the previous directions
      // (two passes keep the residual at rounding level)
      for (int pass = 0; pass < 2; ++pass)
        for (int j = 0; j < i; ++j) {
          v -= v.dot(fr.f[j]) * fr.f[j];
          v -= v.dot(fr.f[m + j]) * fr.f[m + j];
        }
      if (v.norm() > 1e-6) break;
    }
    fr.f[i] = v / v.norm();
    fr.f[m + i] = J.apply(fr.f[i]);
  }
  return fr;
}

const char* functional_name(Functional f) {
  switch (f) {
    case Functional::Hsc:
      return "hsc";
    case Functional::OrthBisec:
      return "orth_bisec";
    case Functional::RicPerp:
      return "ric_perp";
    case Functional::MixedC21:
      return "mixed_c21";
  }
  return "unknown";
}

namespace {

// Admissible-input plumbing shared by the sampled-extremes search.  Single
// arguments are unit vectors; the bisectional pair [X; Y] keeps Y unit and
// complex-orthogonal to X.
struct FunctionalEval {
  const KahlerOperator& op;
  Functional id;

  int arg_dim() const {
    return id == Functional::OrthBisec ? 2 * op.n() : op.n();
  }

  // Projects an arbitrary nonzero vector onto the admissible set.
  bool admissibilize(Eigen::VectorXd& z) const {
    const int n = op.n();
    if (id != Functional::OrthBisec) {
      double nz = z.norm();
      if (nz < 1e-8) return false;
      z /= nz;
      return true;
    }
    Eigen::VectorXd X = z.head(n), Y = z.tail(n);
    double nx = X.norm();
    if (nx < 1e-8) return false;
    X /= nx;
    Eigen::VectorXd JX = op.J().apply(X);
    Y -= Y.dot(X) * X;
    Y -= Y.dot(JX) * JX;
    double ny = Y.norm();
    if (ny < 1e-8) return false;
    Y /= ny;
    z.head(n) = X;
    z.tail(n) = Y;
    return true;
  }

  double value(const Eigen::VectorXd& z) const {
    const int n = op.n();
    if (id == Functional::OrthBisec) {
      Eigen::VectorXd X = z.head(n), Y = z.tail(n);
      return op.R().eval(X, op.J().apply(X), Y, op.J().apply(Y));
    }
    Eigen::VectorXd JX = op.J().apply(z);
    double h = op.R().eval(z, JX, z, JX);
    switch (id) {
      case Functional::Hsc:
        return h;
      case Functional::RicPerp:
        return z.dot(op.ricci() * z) - h;
      case Functional::MixedC21:
        return 2.0 * z.dot(op.ricci() * z) - h;
      default:
        return h;
    }
  }
};

// 20 projected-gradient steps (finite differences, greedy acceptance).
void refine(const FunctionalEval& ev, Eigen::VectorXd& z, double& val,
            bool maximize) {
  const double h = 1e-5;
  const int d = static_cast<int>(z.size());
  for (int iter = 0; iter < 20; ++iter) {
    Eigen::VectorXd grad(d);
    for (int a = 0; a < d; ++a) {
      Eigen::VectorXd zp = z, zm = z;
      zp[a] += h;
      zm[a] -= h;
      if (!ev.admissibilize(zp) || !ev.admissibilize(zm)) {
        grad[a] = 0.0;
        continue;
      }
      grad[a] = (ev.value(zp) - ev.value(zm)) / (2.0 * h);
    }
    double gnorm = grad.norm();
    if (gnorm < 1e-14) break;
    double step = 0.1 / (1.0 + iter);
    Eigen::VectorXd cand = z + (maximize ? step : -step) * grad / gnorm;
    if (!ev.admissibilize(cand)) continue;
    double cval = ev.value(cand);
    if (maximize ? (cval > val) : (cval < val)) {
      z = cand;
      val = cval;
    }
  }
}

}  // namespace

FunctionalReport functional_extremes(const KahlerOperator& op, Functional f,
                                     int samples, std::uint64_t seed) {
  FunctionalEval ev{op, f};
  const int n = op.n();
  const int d = ev.arg_dim();

  std::vector<Eigen::VectorXd> starts;
  // canonical coordinate seeds: frame vectors, and admissible frame pairs
  if (f == Functional::OrthBisec) {
    ComplexStructure J(op.m());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (b == a || b == J.image_index(a)) continue;
        Eigen::VectorXd z = Eigen::VectorXd::Zero(d);
        z[a] = 1.0;
        z[n + b] = 1.0;
        starts.push_back(std::move(z));
      }
  } else {
    for (int a = 0; a < n; ++a) {
      Eigen::VectorXd z = Eigen::VectorXd::Zero(d);
      z[a] = 1.0;
      starts.push_back(std::move(z));
    }
  }
  Rng rng(sub_seed(seed, static_cast<std::uint64_t>(f) + 0xc2a));
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd z(d);
    for (int a = 0; a < d; ++a) z[a] = rng.gaussian();
    if (ev.admissibilize(z)) starts.push_back(std::move(z));
  }

  std::vector<std::pair<double, int>> scored;
  for (std::size_t s = 0; s < starts.size(); ++s)
    scored.emplace_back(ev.value(starts[s]), static_cast<int>(s));
  std::sort(scored.begin(), scored.end());

  FunctionalReport out;
  out.id = f;
  out.samples = samples;
  out.seed = seed;
  out.min_value = scored.front().first;
  out.argmin = starts[scored.front().second];
  out.max_value = scored.back().first;
  out.argmax = starts[scored.back().second];

  const int refine_count =
      std::min<int>(8, static_cast<int>(scored.size()));
  for (int r = 0; r < refine_count; ++r) {
    Eigen::VectorXd z = starts[scored[r].second];
    double val = scored[r].first;
    refine(ev, z, val, /*maximize=*/false);
    if (val < out.min_value) {
      out.min_value = val;
      out.argmin = z;
    }
    z = starts[scored[scored.size() - 1 - r].second];
    val = scored[scored.size() - 1 - r].first;
    refine(ev, z, val, /*maximize=*/true);
    if (val > out.max_value) {
      out.max_value = val;
      out.argmax = z;
    }
  }
  return out;
}

}  // namespace cosk
