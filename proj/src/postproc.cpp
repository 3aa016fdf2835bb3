#include "curvem/postproc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "curvem/element.hpp"
#include "curvem/errors.hpp"

namespace curvem {

namespace {

void append_real(std::string& row, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  row += buf;
}

}  // namespace

ErrorPair compute_errors(const Mesh& mesh, int k, const Eigen::VectorXd& dofs,
                         const ScalarField& u, const VectorField& grad_u,
                         const QuadConfig& quad) {
  const GlobalDofMap map = build_dof_map(mesh, k);
  if (dofs.size() != map.total())
    throw DomainError("compute_errors: DoF vector length does not match the mesh");

  const int exactness = std::max(quad.bulk_degree(k), 2 * k + 2);
  double num_h1 = 0.0, num_l2 = 0.0, den_h1 = 0.0, den_l2 = 0.0;
  for (int el = 0; el < map.n_elements; ++el) {
    const LocalOperators ops(mesh, el, k, quad);
    const std::vector<int> global = map.element_dofs(mesh, el);
    Eigen::VectorXd local(static_cast<Eigen::Index>(global.size()));
    for (std::size_t a = 0; a < global.size(); ++a)
      local(static_cast<Eigen::Index>(a)) = dofs(global[a]);
    const Eigen::VectorXd coeff = ops.ritz_galerkin() * local;

    const BulkRule rule = bulk_rule(mesh, mesh.elements[el], exactness);
    const ScaledMonomialBasis2D& basis = ops.basis();
    for (Eigen::Index q = 0; q < rule.weights.size(); ++q) {
      const Eigen::Vector2d& x = rule.points[static_cast<std::size_t>(q)];
      const double w = rule.weights(q);
      const double uv = u(x);
      const Eigen::Vector2d gv = grad_u(x);
      const double pv = basis.eval(x).dot(coeff);
      const Eigen::Vector2d pg = basis.eval_grad(x).transpose() * coeff;
      num_h1 += w * (gv - pg).squaredNorm();
      num_l2 += w * (uv - pv) * (uv - pv);
      den_h1 += w * gv.squaredNorm();
      den_l2 += w * uv * uv;
    }
  }

  ErrorPair out;
  out.h = mesh.mesh_size();
  out.n_dofs = map.total();
  // Degenerate normalization (constant or zero datum): fall back to the
  // absolute quantities instead of dividing by a vanishing seminorm.
  out.absolute = den_h1 < 1e-28 || den_l2 < 1e-28;
  if (out.absolute) {
    out.e_h1 = std::sqrt(num_h1);
    out.e_l2 = std::sqrt(num_l2);
  } else {
    out.e_h1 = std::sqrt(num_h1 / den_h1);
    out.e_l2 = std::sqrt(num_l2 / den_l2);
  }
  return out;
}

Eigen::VectorXd interpolate_dofs(const Mesh& mesh, int k, const ScalarField& v,
                                 const QuadConfig& quad) {
  const GlobalDofMap map = build_dof_map(mesh, k);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(map.total());
  for (int el = 0; el < map.n_elements; ++el) {
    const Eigen::VectorXd local = element_dofs_of(mesh, el, k, v, quad);
    const std::vector<int> global = map.element_dofs(mesh, el);
    for (std::size_t a = 0; a < global.size(); ++a)
      out(global[a]) = local(static_cast<Eigen::Index>(a));
  }
  return out;
}

double fit_slope(const std::vector<double>& hs,
                 const std::vector<double>& errors) {
  if (hs.size() != errors.size())
    throw DomainError("fit_slope: mismatched sample lengths");
  if (hs.size() < 2)
    throw DomainError("fit_slope: need at least two refinement points");
  const int n = static_cast<int>(hs.size());
  double mx = 0.0, my = 0.0;
  std::vector<double> lx(hs.size()), ly(hs.size());
  for (int i = 0; i < n; ++i) {
    if (!(hs[i] > 0.0) || !(errors[i] > 0.0))
      throw DomainError("fit_slope: mesh sizes and errors must be positive");
    lx[i] = std::log(hs[i]);
    ly[i] = std::log(errors[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw DomainError("fit_slope: all mesh sizes coincide");
  return sxy / sxx;
}

RateFit fit_rates(const ConvergenceReport& report) {
  const std::size_t n = report.levels.size();
  if (n < 2) throw DomainError("fit_rates: need at least two levels");
  std::vector<double> hs(n), e1(n), e2(n);
  for (std::size_t i = 0; i < n; ++i) {
    hs[i] = report.levels[i].h;
    e1[i] = report.levels[i].e_h1;
    e2[i] = report.levels[i].e_l2;
  }
  RateFit fit;
  fit.slope_h1 = fit_slope(hs, e1);
  fit.slope_l2 = fit_slope(hs, e2);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double dh = std::log(hs[i] / hs[i + 1]);
    fit.pairwise_h1.push_back(std::log(e1[i] / e1[i + 1]) / dh);
    fit.pairwise_l2.push_back(std::log(e2[i] / e2[i + 1]) / dh);
  }
  return fit;
}

void write_report_csv(std::ostream& os, const ConvergenceReport& report) {
  os << "k,mesh_family,level,h,ndofs,EH1,EL2,slope_H1,slope_L2\n";
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    const ErrorPair& lvl = report.levels[i];
    std::string row = std::to_string(report.k);
    row += ',';
    row += report.mesh_family;
    row += ',';
    row += std::to_string(i);
    row += ',';
    append_real(row, lvl.h);
    row += ',';
    row += std::to_string(lvl.n_dofs);
    row += ',';
    append_real(row, lvl.e_h1);
    row += ',';
    append_real(row, lvl.e_l2);
    row += ',';
    append_real(row, report.rates.slope_h1);
    row += ',';
    append_real(row, report.rates.slope_l2);
    row += '\n';
    os << row;
  }
}

}  // namespace curvem
