#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "curvem/element.hpp"
#include "curvem/mesh.hpp"
#include "curvem/quadrature.hpp"

namespace curvem {

using ScalarField = std::function<double(const Eigen::Vector2d&)>;

// Global numbering: k DoFs per edge first (edge id order, canonical edge
// orientation, shared verbatim by both incident elements), then the bulk
// blocks per element. Boundary-edge DoFs are constrained to the moments of
// the Dirichlet datum, everything else is free.
struct GlobalDofMap {
  int k = 1;
  int n_edges = 0;
  int n_elements = 0;
  int bulk_per_element = 0;
  std::vector<signed char> constrained;  // 1 on boundary-edge DoFs

  int total() const { return k * n_edges + bulk_per_element * n_elements; }
  int edge_dof(int edge, int i) const { return edge * k + i; }
  int bulk_dof(int element, int j) const {
    return k * n_edges + element * bulk_per_element + j;
  }
  // Local DoF index -> global DoF index for one element.
  std::vector<int> element_dofs(const Mesh& mesh, int element) const;
};

GlobalDofMap build_dof_map(const Mesh& mesh, int k);

// Full-size vector with D_e^i(g) on boundary-edge DoFs, zero elsewhere.
Eigen::VectorXd dirichlet_moments(const Mesh& mesh, int k, const ScalarField& g,
                                  const QuadConfig& quad = {});

// Symmetric positive definite system over the free DoFs after constraint
// elimination; constrained columns are folded into the right side.
struct GlobalSystem {
  GlobalDofMap map;
  Eigen::SparseMatrix<double> A;
  Eigen::VectorXd rhs;
  std::vector<int> free_of_global;  // global -> free index, -1 if constrained
  std::vector<int> global_of_free;  // free index -> global
  Eigen::VectorXd constrained_values;
};

GlobalSystem assemble(const Mesh& mesh, int k, const ScalarField& f, const ScalarField& g,
                      const QuadConfig& quad = {});

struct SolveStats {
  int iterations = 0;
  double residual = 0.0;
  std::vector<double> history;  // relative residual per iteration
};

// Diagonally preconditioned conjugate gradients to a relative residual of
// 1e-12; throws SolverError with the residual history on stagnation.
Eigen::VectorXd solve_cg(const GlobalSystem& sys, SolveStats* stats = nullptr,
                         double tol = 1e-12, int max_iterations = 0);

// Sparse LDLT factorization behind the same interface.
Eigen::VectorXd solve_direct(const GlobalSystem& sys, SolveStats* stats = nullptr);

// Free solution plus constrained values, in global DoF numbering.
Eigen::VectorXd expand_solution(const GlobalSystem& sys, const Eigen::VectorXd& free_values);

// assemble + solve (solver: "cg" or "direct"), returning the full DoF vector.
Eigen::VectorXd solve_poisson(const Mesh& mesh, int k, const ScalarField& f,
                              const ScalarField& g, const std::string& solver = "direct",
                              const QuadConfig& quad = {}, SolveStats* stats = nullptr);

// CSV export, one `dof_id,value` row per DoF with 17 significant digits.
void solution_to_csv(std::ostream& out, const Eigen::VectorXd& full_solution);

}  // namespace curvem
