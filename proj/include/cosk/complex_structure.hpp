#pragma once

#include <Eigen/Dense>

namespace cosk {

// Orthogonal complex structure on R^{2m} in the standard adapted frame:
// J e_i = e_{m+i} and J e_{m+i} = -e_i for 0 <= i < m.  J is orthogonal and
// J^2 = -I exactly (it only permutes coordinates and flips signs).
class ComplexStructure {
 public:
  explicit ComplexStructure(int m);

  int m() const { return m_; }
  int n() const { return 2 * m_; }

  // J e_a = image_sign(a) * e_{image_index(a)}.
  int image_index(int a) const { return a < m_ ? a + m_ : a - m_; }
  double image_sign(int a) const { return a < m_ ? 1.0 : -1.0; }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd matrix() const;

 private:
  int m_;
};

}  // namespace cosk
