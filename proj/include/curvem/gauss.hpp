#pragma once

#include <Eigen/Dense>

namespace curvem {

// One-dimensional Gauss-Legendre rule. Nodes/weights are computed once per
// point count by Newton iteration on the Legendre recurrence and cached.
struct Gauss1D {
  Eigen::VectorXd nodes;    // on [-1, 1]
  Eigen::VectorXd weights;  // sum to 2
};

// Rule with n points (exact for polynomials of degree <= 2n-1).
const Gauss1D& gauss_legendre(int n);

// The same rule mapped to [a, b]; weights sum to b - a.
Gauss1D gauss_on_interval(double a, double b, int n);

// Smallest point count whose rule integrates polynomials of 'degree' exactly.
inline int gauss_points_for_degree(int degree) { return degree / 2 + 1; }

}  // namespace curvem
