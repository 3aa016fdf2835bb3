#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "curvem/gauss.hpp"
#include "curvem/mesh.hpp"

namespace curvem {

// Parameter-space Gauss-Legendre rule on the edge's canonical interval.
using EdgeRule = Gauss1D;

EdgeRule edge_rule(const EdgeGeometry& geom, int p);

// int_e f ds = sum w_q f(gamma(t_q)) |gamma'(t_q)|.
double edge_integral(const EdgeGeometry& geom, int p,
                     const std::function<double(const Eigen::Vector2d&)>& f);

// Quadrature orders, overridable per run. Zeros mean the k-dependent
// defaults: straight edges k+4 points, curved edges k+8, bulk rules exact to
// degree 2k+2 on straight geometry.
struct QuadConfig {
  int edge_pts_straight = 0;
  int edge_pts_curved = 0;
  int bulk_exactness = 0;

  int edge_pts(int k, bool curved) const {
    const int v = curved ? edge_pts_curved : edge_pts_straight;
    return v > 0 ? v : (curved ? k + 8 : k + 4);
  }
  int bulk_degree(int k) const { return bulk_exactness > 0 ? bulk_exactness : 2 * k + 2; }
};

// mu_alpha = int_K m_alpha dK for |alpha| <= degree, in the scaled monomial
// convention with the element's cached centroid and diameter; graded lex order.
struct MomentTable {
  int degree = 0;
  Eigen::VectorXd mu;
};

// Divergence-theorem route: int_K u^a v^b dK = h/(a+1) * sum_e sigma_e
// int_{I_e} u(gamma)^{a+1} v(gamma)^b gamma_2'(t) dt in centroid-scaled
// coordinates. pts <= 0 picks the minimum exact count for straight edges.
MomentTable monomial_moments_divergence(const Mesh& mesh, const Element& el, int degree,
                                        int pts_straight = 0, int pts_curved = 0);

// Physical points/weights over K from a fan around a star point: each
// boundary step spawns the blended patch (t,s) -> (1-s) gamma(t) + s x_c.
// Weights are Jacobian-positive; a sign flip means K is not star-shaped with
// respect to the star point (centroid, then chord-polygon incenter, then
// MeshError).
struct BulkRule {
  std::vector<Eigen::Vector2d> points;
  Eigen::VectorXd weights;

  double total_weight() const { return weights.sum(); }
};

BulkRule bulk_rule(const Mesh& mesh, const Element& el, int exactness_degree,
                   int curved_extra_pts = 4);

double bulk_integral(const BulkRule& rule,
                     const std::function<double(const Eigen::Vector2d&)>& f);

}  // namespace curvem
