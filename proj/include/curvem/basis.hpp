#pragma once

#include <Eigen/Dense>
#include <array>

namespace curvem {

// Monomial ordering is graded lexicographic throughout the library:
// (0,0) | (1,0) (0,1) | (2,0) (1,1) (0,2) | ...
// Every matrix whose rows/columns are indexed by a polynomial basis uses
// this ordering.
namespace mono {

// Degrees above this are rejected by the index helpers. Products of two
// degree-6 monomials plus the divergence-theorem degree bump stay below it.
inline constexpr int max_degree = 14;

// Number of 2D monomials of total degree <= n; zero for n < 0.
inline int dim2(int n) { return n < 0 ? 0 : (n + 1) * (n + 2) / 2; }

int index(int a1, int a2);                  // multi-index -> position
std::array<int, 2> exponents(int idx);      // position -> multi-index

// Index of the product monomial x^a * x^b. Throws if the result exceeds
// max_degree.
int product_index(const std::array<int, 2>& a, const std::array<int, 2>& b);

}  // namespace mono

// Scaled and shifted monomials on an element: m_a(x) = ((x - center)/h)^a,
// |a| <= degree. 'center' is the element centroid and 'h' its diameter.
class ScaledMonomialBasis2D {
 public:
  ScaledMonomialBasis2D(const Eigen::Vector2d& center, double diameter, int degree);

  int degree() const { return degree_; }
  int size() const { return mono::dim2(degree_); }
  const Eigen::Vector2d& center() const { return center_; }
  double diameter() const { return diameter_; }

  // Values of all monomials at a physical point.
  Eigen::VectorXd eval(const Eigen::Vector2d& x) const;
  // Gradients, one row per monomial.
  Eigen::Matrix<double, Eigen::Dynamic, 2> eval_grad(const Eigen::Vector2d& x) const;

  // Coefficient matrix L (size() x dim2(degree-2)) with
  //   laplacian(m_a) = sum_j L(a,j) m_j,  m_j of degree <= degree-2.
  // Entries carry the 1/h^2 factor and are otherwise exact integers.
  Eigen::MatrixXd laplacian_table() const;

 private:
  Eigen::Vector2d center_;
  double diameter_;
  int degree_;
};

// Scaled monomials on a parameter interval [t0, t1]:
//   m_i(t) = ((t - mid)/half)^i, mid the midpoint, half the half-width.
class ScaledMonomialBasis1D {
 public:
  ScaledMonomialBasis1D(double t0, double t1, int degree);

  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }
  double midpoint() const { return mid_; }
  double half_width() const { return half_; }

  Eigen::VectorXd eval(double t) const;

 private:
  double mid_;
  double half_;
  int degree_;
};

}  // namespace curvem
