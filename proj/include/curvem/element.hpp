#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "curvem/basis.hpp"
#include "curvem/mesh.hpp"
#include "curvem/quadrature.hpp"

namespace curvem {

// DoF layout of one element of order k: one block of k edge moments per
// boundary walk step, then dim2(k-2) bulk moments. Edge moment i pairs with
// the degree-i scaled parameter monomial in the edge's canonical orientation
// (both incident elements read the same functional), bulk moment j with the
// graded-lex element monomial j. Every moment is normalized by the measure:
//   edge:  |e|^-1 int_e v mtilde_i ds   (|e| = arc length)
//   bulk:  |K|^-1 int_K v m_j dK
struct DofLayout {
  int k = 1;
  int n_edges = 0;

  int n_edge_dofs() const { return k * n_edges; }
  int n_bulk_dofs() const { return mono::dim2(k - 2); }
  int size() const { return n_edge_dofs() + n_bulk_dofs(); }

  int edge_dof(int walk_step, int i) const { return walk_step * k + i; }
  int bulk_dof(int j) const { return n_edge_dofs() + j; }
};

// L2 projection onto the k parameter monomials of one edge, in the ds
// measure: mass(i,j) = int_{I_e} m_i m_j |gamma'| dt and
//   coeffs(PI0e v) = proj * (edge DoF block of v),  proj = |e| * mass^-1.
// Applied to the DoF block of a function already in the span, this returns
// that function's own coefficients.
struct EdgeProjection {
  Eigen::MatrixXd mass;
  Eigen::MatrixXd proj;
};

// element_hint only labels the ConditioningError raised when the edge mass
// matrix falls below the reciprocal-condition guard.
EdgeProjection edge_projection(const Mesh& mesh, int edge_id, int k,
                               const QuadConfig& quad = {}, int element_hint = -1);

// All local operators of one element, in the DoF layout above and the
// graded-lex monomial order of ScaledMonomialBasis2D(centroid, diameter, k).
//
// The Ritz-Galerkin projector solves, for every non-constant monomial m_i,
//   int_K grad m_i . grad (Pi v) = -int_K (lap m_i) v
//                                  + sum_e int_e PI0e(n . grad m_i) v ds
// with the edge flux projected onto the edge parameter monomials so the
// right side is a pure DoF read. The constant part is fixed by the boundary
// average (k = 1) or the bulk average (k >= 2). On straight elements the
// flux projection is exact and the projector reproduces all of P_k; on
// curved elements it reproduces constants only.
class LocalOperators {
 public:
  LocalOperators(const Mesh& mesh, int element_id, int k, QuadConfig quad = {});

  int element_id() const { return element_; }
  int order() const { return k_; }
  double kappa() const { return element().kappa; }
  const Element& element() const;
  const DofLayout& layout() const { return layout_; }
  const ScaledMonomialBasis2D& basis() const { return basis_; }
  const MomentTable& moments() const { return moments_; }
  const EdgeProjection& edge_proj(int walk_step) const { return edge_proj_[walk_step]; }

  // DoFs of the monomials, size x dim2(k).
  const Eigen::MatrixXd& dof_matrix() const { return D_; }
  // int_K grad m_i . grad m_j, symmetric positive semidefinite.
  const Eigen::MatrixXd& grad_gram() const { return G_; }
  // Left side of the projector system: grad_gram with the zero row of the
  // constant monomial replaced by the average functional.
  const Eigen::MatrixXd& ritz_lhs() const { return Gt_; }
  // Right side, one column per DoF.
  const Eigen::MatrixXd& ritz_rhs() const { return B_; }
  // Projector onto degree-k monomial coefficients: coeffs = ritz_galerkin * dofs.
  const Eigen::MatrixXd& ritz_galerkin() const { return Pi_; }
  // Bulk L2 projector onto degree-(k-2) coefficients; 0 x size for k = 1.
  const Eigen::MatrixXd& l2_bulk() const { return Pi0_; }
  // dofi-dofi stabilization in DoF coordinates: the identity.
  Eigen::MatrixXd stabilization() const;
  // kappa * (Pi' G Pi + (I - D Pi)' S (I - D Pi)), symmetrized; its kernel
  // is exactly the DoF vector of the constant.
  const Eigen::MatrixXd& stiffness() const { return A_; }

  // Local load vector. k >= 2 pairs f with the bulk L2 projection of the
  // test function; k = 1 spreads the mean of f over the constant edge
  // moments, |K| fbar / n_edges each.
  Eigen::VectorXd load(const std::function<double(const Eigen::Vector2d&)>& f) const;

 private:
  const Mesh* mesh_;
  int element_;
  int k_;
  QuadConfig quad_;
  DofLayout layout_;
  ScaledMonomialBasis2D basis_;
  MomentTable moments_;
  std::vector<EdgeProjection> edge_proj_;
  Eigen::MatrixXd D_, G_, Gt_, B_, Pi_, Pi0_, pi0_full_, A_;
};

// DoF vector of a pointwise-evaluatable function on one element: edge moments
// by arc quadrature, bulk moments by the fan rule.
Eigen::VectorXd element_dofs_of(const Mesh& mesh, int element_id, int k,
                                const std::function<double(const Eigen::Vector2d&)>& v,
                                const QuadConfig& quad = {});

}  // namespace curvem
