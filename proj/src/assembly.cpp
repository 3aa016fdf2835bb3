#include "curvem/assembly.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

#include "curvem/errors.hpp"

namespace curvem {

std::vector<int> GlobalDofMap::element_dofs(const Mesh& mesh, int element) const {
  const Element& el = mesh.elements[element];
  std::vector<int> g;
  g.reserve(k * el.edges.size() + bulk_per_element);
  for (const ElementEdge& ee : el.edges)
    for (int i = 0; i < k; ++i) g.push_back(edge_dof(ee.edge, i));
  for (int j = 0; j < bulk_per_element; ++j) g.push_back(bulk_dof(element, j));
  return g;
}

GlobalDofMap build_dof_map(const Mesh& mesh, int k) {
  if (!mesh.finalized) throw MeshError("mesh not finalized");
  GlobalDofMap map;
  map.k = k;
  map.n_edges = static_cast<int>(mesh.edges.size());
  map.n_elements = static_cast<int>(mesh.elements.size());
  map.bulk_per_element = mono::dim2(k - 2);
  map.constrained.assign(map.total(), 0);
  for (int e = 0; e < map.n_edges; ++e)
    if (mesh.boundary(e))
      for (int i = 0; i < k; ++i) map.constrained[map.edge_dof(e, i)] = 1;
  return map;
}

Eigen::VectorXd dirichlet_moments(const Mesh& mesh, int k, const ScalarField& g,
                                  const QuadConfig& quad) {
  const GlobalDofMap map = build_dof_map(mesh, k);
  Eigen::VectorXd values = Eigen::VectorXd::Zero(map.total());
  for (int e = 0; e < map.n_edges; ++e) {
    if (!mesh.boundary(e)) continue;
    const EdgeGeometry geom(mesh, e);
    const ScaledMonomialBasis1D b1(geom.t0(), geom.t1(), k - 1);
    const EdgeRule rule = edge_rule(geom, quad.edge_pts(k, geom.curved()));
    Eigen::VectorXd mom = Eigen::VectorXd::Zero(k);
    for (int q = 0; q < rule.nodes.size(); ++q) {
      const CurveSample s = geom.at(rule.nodes(q));
      mom += (rule.weights(q) * s.speed * g(s.position)) * b1.eval(rule.nodes(q));
    }
    values.segment(map.edge_dof(e, 0), k) = mom / mesh.edge_length[e];
  }
  return values;
}

GlobalSystem assemble(const Mesh& mesh, int k, const ScalarField& f, const ScalarField& g,
                      const QuadConfig& quad) {
  GlobalSystem sys;
  sys.map = build_dof_map(mesh, k);
  sys.constrained_values = dirichlet_moments(mesh, k, g, quad);

  const int total = sys.map.total();
  sys.free_of_global.assign(total, -1);
  int n_free = 0;
  for (int d = 0; d < total; ++d)
    if (!sys.map.constrained[d]) {
      sys.free_of_global[d] = n_free++;
      sys.global_of_free.push_back(d);
    }

  sys.rhs = Eigen::VectorXd::Zero(n_free);
  std::vector<Eigen::Triplet<double>> triplets;

  for (int e = 0; e < sys.map.n_elements; ++e) {
    const LocalOperators ops(mesh, e, k, quad);
    const Eigen::MatrixXd& A = ops.stiffness();
    const Eigen::VectorXd b = ops.load(f);
    const std::vector<int> gdofs = sys.map.element_dofs(mesh, e);
    const int n = static_cast<int>(gdofs.size());

    for (int a = 0; a < n; ++a) {
      const int fa = sys.free_of_global[gdofs[a]];
      if (fa < 0) continue;
      sys.rhs(fa) += b(a);
      for (int c = 0; c < n; ++c) {
        const int fc = sys.free_of_global[gdofs[c]];
        if (fc >= 0)
          triplets.emplace_back(fa, fc, A(a, c));
        else
          sys.rhs(fa) -= A(a, c) * sys.constrained_values(gdofs[c]);
      }
    }
  }

  sys.A.resize(n_free, n_free);
  sys.A.setFromTriplets(triplets.begin(), triplets.end());
  sys.A.makeCompressed();
  return sys;
}

Eigen::VectorXd solve_cg(const GlobalSystem& sys, SolveStats* stats, double tol,
                         int max_iterations) {
  const Eigen::Index n = sys.A.rows();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  SolveStats local;
  if (n == 0 || sys.rhs.norm() == 0.0) {
    if (stats) *stats = local;
    return x;
  }
  if (max_iterations <= 0) max_iterations = std::max<int>(1000, 4 * static_cast<int>(n));

  Eigen::VectorXd diag(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = sys.A.coeff(i, i);
    diag(i) = d > 0.0 ? d : 1.0;
  }

  const double nb = sys.rhs.norm();
  Eigen::VectorXd r = sys.rhs;
  Eigen::VectorXd z = r.cwiseQuotient(diag);
  Eigen::VectorXd p = z;
  double rz = r.dot(z);

  for (int it = 1; it <= max_iterations; ++it) {
    const Eigen::VectorXd Ap = sys.A * p;
    const double pAp = p.dot(Ap);
    if (pAp <= 0.0)
      throw SolverError("conjugate gradients hit a nonpositive curvature direction",
                        local.history);
    const double alpha = rz / pAp;
    x += alpha * p;
    r -= alpha * Ap;
    const double rel = r.norm() / nb;
    local.history.push_back(rel);
    local.iterations = it;
    local.residual = rel;
    if (rel <= tol) {
      if (stats) *stats = std::move(local);
      return x;
    }
    z = r.cwiseQuotient(diag);
    const double rz_next = r.dot(z);
    p = z + (rz_next / rz) * p;
    rz = rz_next;
  }
  throw SolverError("conjugate gradients did not reach tolerance", local.history);
}

Eigen::VectorXd solve_direct(const GlobalSystem& sys, SolveStats* stats) {
  SolveStats local;
  if (sys.A.rows() == 0) {
    if (stats) *stats = local;
    return Eigen::VectorXd();
  }
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(sys.A);
  if (ldlt.info() != Eigen::Success)
    throw SolverError("sparse LDLT factorization failed", {});
  const Eigen::VectorXd x = ldlt.solve(sys.rhs);
  const double nb = sys.rhs.norm();
  local.residual = nb > 0.0 ? (sys.A * x - sys.rhs).norm() / nb : 0.0;
  local.history.push_back(local.residual);
  if (stats) *stats = std::move(local);
  return x;
}

Eigen::VectorXd expand_solution(const GlobalSystem& sys, const Eigen::VectorXd& free_values) {
  Eigen::VectorXd full = sys.constrained_values;
  for (int fi = 0; fi < static_cast<int>(sys.global_of_free.size()); ++fi)
    full(sys.global_of_free[fi]) = free_values(fi);
  return full;
}

Eigen::VectorXd solve_poisson(const Mesh& mesh, int k, const ScalarField& f,
                              const ScalarField& g, const std::string& solver,
                              const QuadConfig& quad, SolveStats* stats) {
  const GlobalSystem sys = assemble(mesh, k, f, g, quad);
  Eigen::VectorXd free_values;
  if (solver == "cg")
    free_values = solve_cg(sys, stats);
  else if (solver == "direct")
    free_values = solve_direct(sys, stats);
  else
    throw DomainError("unknown solver '" + solver + "', expected cg or direct");
  return expand_solution(sys, free_values);
}

void solution_to_csv(std::ostream& out, const Eigen::VectorXd& full_solution) {
  out << "dof_id,value\n";
  char buf[40];
  for (Eigen::Index i = 0; i < full_solution.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", full_solution(i));
    out << i << ',' << buf << '\n';
  }
}

}  // namespace curvem
