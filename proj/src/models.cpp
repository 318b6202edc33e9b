#include "cosk/models.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "cosk/spectral.hpp"
#include "cosk/util.hpp"

namespace cosk {

KahlerOperator const_hsc(int m, double c) {
  if (m < 1) throw std::invalid_argument("const_hsc: needs m >= 1");
  const int n = 2 * m;
  ComplexStructure J(m);
  // g(e_a, J e_b)
  auto jg = [&](int a, int b) {
    return a == J.image_index(b) ? static_cast<double>(J.image_sign(b)) : 0.0;
  };
  auto del = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  CurvatureTensor R(n);
  const double c4 = c / 4.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          double v = del(i, k) * del(j, l) - del(i, l) * del(j, k) +
                     jg(i, k) * jg(j, l) - jg(i, l) * jg(j, k) +
                     2.0 * jg(i, j) * jg(k, l);
          if (v != 0.0) R.set(i, j, k, l, c4 * v);
        }
  return KahlerOperator::checked(R);
}

CurvatureTensor sphere(int n, double kappa) {
  CurvatureTensor R(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) R.set(i, j, i, j, kappa);
  return R;
}

CurvatureTensor flat(int n) { return CurvatureTensor(n); }

CurvatureTensor product(const CurvatureTensor& A, const CurvatureTensor& B) {
  const int na = A.dim(), nb = B.dim();
  CurvatureTensor R(na + nb);
  for (int i = 0; i < na; ++i)
    for (int j = i + 1; j < na; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = k + 1; l < na; ++l) {
          double v = A(i, j, k, l);
          if (v != 0.0) R.set(i, j, k, l, v);
        }
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j)
      for (int k = 0; k < nb; ++k)
        for (int l = k + 1; l < nb; ++l) {
          double v = B(i, j, k, l);
          if (v != 0.0) R.set(na + i, na + j, na + k, na + l, v);
        }
  return R;
}

KahlerOperator kahler_product(const KahlerOperator& A,
                              const KahlerOperator& B) {
  const int ma = A.m(), mb = B.m(), m = ma + mb;
  // factor indices, interleaved: holomorphic directions of A, then of B,
  // then their images under the ambient complex structure
  auto map_a = [&](int u) { return u < ma ? u : m + (u - ma); };
  auto map_b = [&](int u) { return u < mb ? ma + u : m + ma + (u - mb); };

  CurvatureTensor R(2 * m);
  const int na = 2 * ma, nb = 2 * mb;
  for (int i = 0; i < na; ++i)
    for (int j = i + 1; j < na; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = k + 1; l < na; ++l) {
          double v = A.R()(i, j, k, l);
          if (v != 0.0) R.set(map_a(i), map_a(j), map_a(k), map_a(l), v);
        }
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j)
      for (int k = 0; k < nb; ++k)
        for (int l = k + 1; l < nb; ++l) {
          double v = B.R()(i, j, k, l);
          if (v != 0.0) R.set(map_b(i), map_b(j), map_b(k), map_b(l), v);
        }
  return KahlerOperator::checked(R);
}

KahlerOperator cp_times_flat(int m) {
  return kahler_product(const_hsc(m, 4.0), KahlerOperator::checked(flat(2)));
}

namespace {

// Solves the linear constraints in pair coordinates x_{pq} = R(p, q) over
// unordered pairs-of-pairs (p <= q), with the index-pair antisymmetries and
// the pair exchange built into the coordinates themselves.  The column
// weights sqrt(4) / sqrt(8) (diagonal / off-diagonal orbit sizes) turn the
// Euclidean kernel basis of the SVD into a tensor-orthonormal one.
std::vector<CurvatureTensor> solve_constraints(int n, bool j_invariant) {
  const int d = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pid(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pid[i][j] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  const int D = d * (d + 1) / 2;
  auto coord = [&](int p, int q) {
    if (p > q) std::swap(p, q);
    return p * d - p * (p - 1) / 2 + (q - p);
  };
  auto weight = [](int p, int q) { return p == q ? 2.0 : 2.0 * std::sqrt(2.0); };

  std::vector<std::vector<std::pair<int, double>>> rows;
  // first Bianchi: one independent relation per 4-element index set
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e)
          rows.push_back({{coord(pid[a][b], pid[c][e]), 1.0},
                          {coord(pid[b][c], pid[a][e]), 1.0},
                          {coord(pid[a][c], pid[b][e]), -1.0}});
  if (j_invariant) {
    // R(p, q) = sign * R(p, image of q) for every ordered pair of pairs
    ComplexStructure J(n / 2);
    for (int q = 0; q < d; ++q) {
      auto [k, l] = pairs[static_cast<std::size_t>(q)];
      int ki = J.image_index(k), li = J.image_index(l);
      double s = J.image_sign(k) * J.image_sign(l);
      if (ki > li) {
        std::swap(ki, li);
        s = -s;
      }
      int qi = pid[ki][li];
      for (int p = 0; p < d; ++p) {
        std::vector<std::pair<int, double>> row;
        row.emplace_back(coord(p, q), 1.0);
        row.emplace_back(coord(p, qi), -s);
        if (coord(p, q) == coord(p, qi) && s > 0) continue;  // trivially true
        rows.push_back(std::move(row));
      }
    }
  }

  Eigen::MatrixXd V;
  int kernel_dim;
  if (rows.empty()) {
    V = Eigen::MatrixXd::Identity(D, D);
    kernel_dim = D;
  } else {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<int>(rows.size()), D);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (auto [c, coeff] : rows[r]) A(static_cast<int>(r), c) += coeff;
    // rescale columns so the kernel comes out orthonormal in tensor norm
    for (int p = 0; p < d; ++p)
      for (int q = p; q < d; ++q) A.col(coord(p, q)) /= weight(p, q);
    // Jacobi rather than divide-and-conquer: the latter returns inaccurate
    // values (~1e-6 relative) inside the zero cluster of this matrix, which
    // breaks the rank cut; Jacobi resolves the cluster to machine precision.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double cut = 1e-8 * (sv.size() > 0 ? sv[0] : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv[i] > cut) ++rank;
    V = svd.matrixV();
    kernel_dim = D - rank;
  }

  std::vector<CurvatureTensor> basis;
  basis.reserve(static_cast<std::size_t>(kernel_dim));
  for (int c = D - kernel_dim; c < D; ++c) {
    CurvatureTensor R(n);
    for (int p = 0; p < d; ++p)
      for (int q = p; q < d; ++q) {
        double x = V(coord(p, q), c) / weight(p, q);
        if (x != 0.0) {
          auto [i, j] = pairs[static_cast<std::size_t>(p)];
          auto [k, l] = pairs[static_cast<std::size_t>(q)];
          R.set(i, j, k, l, x);
        }
      }
    basis.push_back(std::move(R));
  }
  return basis;
}

}  // namespace

const KahlerSubspace& kahler_subspace(int m) {
  if (m < 1) throw std::invalid_argument("kahler_subspace: needs m >= 1");
  static std::map<int, KahlerSubspace> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    KahlerSubspace sub;
    sub.m = m;
    sub.basis = solve_constraints(2 * m, true);
    it = cache.emplace(m, std::move(sub)).first;
  }
  return it->second;
}

const AlgebraicSubspace& algebraic_subspace(int n) {
  if (n < 2) throw std::invalid_argument("algebraic_subspace: needs n >= 2");
  static std::map<int, AlgebraicSubspace> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    AlgebraicSubspace sub;
    sub.n = n;
    sub.basis = solve_constraints(n, false);
    it = cache.emplace(n, std::move(sub)).first;
  }
  return it->second;
}

namespace {

CurvatureTensor random_combination(const std::vector<CurvatureTensor>& basis,
                                   int n, std::uint64_t seed,
                                   std::uint64_t salt) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(sub_seed(seed, salt + attempt));
    CurvatureTensor R(n);
    for (const CurvatureTensor& B : basis) R += rng.gaussian() * B;
    double peak = R.max_abs();
    if (peak > 1e-12) {
      R *= 1.0 / peak;
      return R;
    }
  }
}

}  // namespace

KahlerOperator random_kahler(int m, std::uint64_t seed) {
  const KahlerSubspace& sub = kahler_subspace(m);
  return KahlerOperator::checked(
      random_combination(sub.basis, 2 * m, seed, 0x4b61));
}

CurvatureTensor random_algebraic(int n, std::uint64_t seed) {
  const AlgebraicSubspace& sub = algebraic_subspace(n);
  return random_combination(sub.basis, n, seed, 0xa16e);
}

ScanResult scaled_product_scan(int m, const std::vector<double>& ratios) {
  if (m < 2)
    throw std::invalid_argument("scaled_product_scan: needs m >= 2");
  if (ratios.empty())
    throw std::invalid_argument("scaled_product_scan: empty ratio grid");
  ScanResult out;
  bool first = true;
  for (double t : ratios) {
    KahlerOperator prod =
        kahler_product(const_hsc(m - 1, 4.0), const_hsc(1, 4.0 * t));
    Threshold th = alpha_threshold(eigenvalues(assemble(prod.R())));
    out.points.push_back({t, th.alpha});
    if (first || th.alpha < out.min_threshold) {
      out.min_threshold = th.alpha;
      out.min_ratio = t;
      first = false;
    }
  }
  return out;
}

}  // namespace cosk
