#pragma once

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "curvem/assembly.hpp"
#include "curvem/mesh.hpp"
#include "curvem/quadrature.hpp"

namespace curvem {

using VectorField = std::function<Eigen::Vector2d(const Eigen::Vector2d&)>;

// Relative projected errors of a discrete solution against an analytic field.
// When a normalization integral vanishes (constant or zero exact solution)
// the pair degrades to absolute errors and `absolute` is set.
struct ErrorPair {
  double e_h1 = 0.0;
  double e_l2 = 0.0;
  double h = 0.0;
  int n_dofs = 0;
  bool absolute = false;
};

// Energy and L2 errors of the elementwise projection of `dofs` against u.
// Bulk quadrature runs at exactness >= 2k+2 regardless of `quad` overrides,
// and the denominators use the same rule as the numerators.
ErrorPair compute_errors(const Mesh& mesh, int k, const Eigen::VectorXd& dofs,
                         const ScalarField& u, const VectorField& grad_u,
                         const QuadConfig& quad = {});

// Global DoF vector of the moment interpolant of v. Shared edges are read
// through the same rule by both incident elements, so the scatter is
// write-once in value even though interior edges are visited twice.
Eigen::VectorXd interpolate_dofs(const Mesh& mesh, int k, const ScalarField& v,
                                 const QuadConfig& quad = {});

struct RateFit {
  double slope_h1 = 0.0;
  double slope_l2 = 0.0;
  std::vector<double> pairwise_h1;
  std::vector<double> pairwise_l2;
};

struct ConvergenceReport {
  int k = 1;
  std::string mesh_family;
  std::vector<ErrorPair> levels;
  RateFit rates;
};

// Least-squares slope of log(error) against log(h). Needs at least two
// points and positive data on both axes, else DomainError.
double fit_slope(const std::vector<double>& hs,
                 const std::vector<double>& errors);

// Global and per-step slopes for both norms of a report.
RateFit fit_rates(const ConvergenceReport& report);

// One row per level: k,mesh_family,level,h,ndofs,EH1,EL2,slope_H1,slope_L2.
// Reals carry 17 significant digits; the slope columns repeat the global
// least-squares fit stored in report.rates.
void write_report_csv(std::ostream& os, const ConvergenceReport& report);

}  // namespace curvem
