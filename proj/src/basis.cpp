#include "curvem/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace curvem {
namespace mono {

int index(int a1, int a2) {
  const int d = a1 + a2;
  if (a1 < 0 || a2 < 0 || d > max_degree)
    throw std::invalid_argument("monomial exponents out of range (" + std::to_string(a1) +
                                "," + std::to_string(a2) + ")");
  return d * (d + 1) / 2 + a2;
}

std::array<int, 2> exponents(int idx) {
  if (idx < 0) throw std::invalid_argument("negative monomial index");
  int d = 0;
  while ((d + 1) * (d + 2) / 2 <= idx) ++d;
  const int a2 = idx - d * (d + 1) / 2;
  return {d - a2, a2};
}

int product_index(const std::array<int, 2>& a, const std::array<int, 2>& b) {
  const int a1 = a[0] + b[0], a2 = a[1] + b[1];
  if (a1 + a2 > max_degree)
    throw std::invalid_argument("monomial product exceeds supported degree " +
                                std::to_string(max_degree));
  return index(a1, a2);
}

}  // namespace mono

ScaledMonomialBasis2D::ScaledMonomialBasis2D(const Eigen::Vector2d& center, double diameter,
                                             int degree)
    : center_(center), diameter_(diameter), degree_(degree) {
  if (degree < 0 || degree > mono::max_degree)
    throw std::invalid_argument("unsupported 2D basis degree " + std::to_string(degree));
  if (!(diameter > 0.0)) throw std::invalid_argument("nonpositive element diameter");
}

Eigen::VectorXd ScaledMonomialBasis2D::eval(const Eigen::Vector2d& x) const {
  const double u = (x.x() - center_.x()) / diameter_;
  const double v = (x.y() - center_.y()) / diameter_;
  // pow tables up to the degree, then graded-lex fill
  Eigen::VectorXd pu(degree_ + 1), pv(degree_ + 1);
  pu[0] = pv[0] = 1.0;
  for (int i = 1; i <= degree_; ++i) {
    pu[i] = pu[i - 1] * u;
    pv[i] = pv[i - 1] * v;
  }
  Eigen::VectorXd out(size());
  int p = 0;
  for (int d = 0; d <= degree_; ++d)
    for (int a2 = 0; a2 <= d; ++a2) out[p++] = pu[d - a2] * pv[a2];
  return out;
}

Eigen::Matrix<double, Eigen::Dynamic, 2> ScaledMonomialBasis2D::eval_grad(
    const Eigen::Vector2d& x) const {
  const double u = (x.x() - center_.x()) / diameter_;
  const double v = (x.y() - center_.y()) / diameter_;
  Eigen::VectorXd pu(degree_ + 1), pv(degree_ + 1);
  pu[0] = pv[0] = 1.0;
  for (int i = 1; i <= degree_; ++i) {
    pu[i] = pu[i - 1] * u;
    pv[i] = pv[i - 1] * v;
  }
  Eigen::Matrix<double, Eigen::Dynamic, 2> out(size(), 2);
  int p = 0;
  for (int d = 0; d <= degree_; ++d)
    for (int a2 = 0; a2 <= d; ++a2) {
      const int a1 = d - a2;
      out(p, 0) = a1 > 0 ? a1 * pu[a1 - 1] * pv[a2] / diameter_ : 0.0;
      out(p, 1) = a2 > 0 ? a2 * pu[a1] * pv[a2 - 1] / diameter_ : 0.0;
      ++p;
    }
  return out;
}

Eigen::MatrixXd ScaledMonomialBasis2D::laplacian_table() const {
  const int ncols = mono::dim2(degree_ - 2);
  Eigen::MatrixXd table = Eigen::MatrixXd::Zero(size(), ncols);
  const double s = 1.0 / (diameter_ * diameter_);
  for (int i = 0; i < size(); ++i) {
    const auto [a1, a2] = mono::exponents(i);
    if (a1 >= 2) table(i, mono::index(a1 - 2, a2)) += s * a1 * (a1 - 1);
    if (a2 >= 2) table(i, mono::index(a1, a2 - 2)) += s * a2 * (a2 - 1);
  }
  return table;
}

ScaledMonomialBasis1D::ScaledMonomialBasis1D(double t0, double t1, int degree)
    : mid_(0.5 * (t0 + t1)), half_(0.5 * std::abs(t1 - t0)), degree_(degree) {
  if (degree < 0 || degree > mono::max_degree)
    throw std::invalid_argument("unsupported 1D basis degree " + std::to_string(degree));
  if (!(half_ > 0.0)) throw std::invalid_argument("degenerate parameter interval");
}

Eigen::VectorXd ScaledMonomialBasis1D::eval(double t) const {
  Eigen::VectorXd out(size());
  const double s = (t - mid_) / half_;
  out[0] = 1.0;
  for (int i = 1; i <= degree_; ++i) out[i] = out[i - 1] * s;
  return out;
}

}  // namespace curvem
