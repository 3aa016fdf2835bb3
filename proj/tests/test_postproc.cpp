#include "curvem/postproc.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "curvem/cases.hpp"
#include "curvem/errors.hpp"
#include "curvem/meshgen.hpp"
#include "helpers.hpp"

using namespace curvem;

TEST_CASE("interpolant of a constant has unit edge averages and bulk constant") {
  const Mesh disk = gen_polar_disk_mesh(2, 8, false);
  const int k = 3;
  const Eigen::VectorXd dofs =
      interpolate_dofs(disk, k, [](const Eigen::Vector2d&) { return 1.0; });
  const GlobalDofMap map = build_dof_map(disk, k);
  for (int e = 0; e < map.n_edges; ++e)
    CHECK(dofs(map.edge_dof(e, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  for (int el = 0; el < map.n_elements; ++el)
    CHECK(dofs(map.bulk_dof(el, 0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("polynomial interpolants have vanishing projected errors on straight meshes") {
  const Mesh grid = gen_unit_square_mesh(3);
  struct Probe {
    int k;
    ScalarField u;
    VectorField grad;
  };
  const Probe probes[] = {
      {1, [](const Eigen::Vector2d& p) { return p.x() + 2.0 * p.y() - 0.3; },
       [](const Eigen::Vector2d&) { return Eigen::Vector2d(1.0, 2.0); }},
      {2,
       [](const Eigen::Vector2d& p) {
         return p.x() * p.x() - p.x() * p.y() + p.y() * p.y() + p.x() - 1.0;
       },
       [](const Eigen::Vector2d& p) {
         return Eigen::Vector2d(2.0 * p.x() - p.y() + 1.0,
                                -p.x() + 2.0 * p.y());
       }},
      {3,
       [](const Eigen::Vector2d& p) {
         const double x = p.x(), y = p.y();
         return x * x * x - 2.0 * x * x * y + y * y * y + x * y;
       },
       [](const Eigen::Vector2d& p) {
         const double x = p.x(), y = p.y();
         return Eigen::Vector2d(3.0 * x * x - 4.0 * x * y + y,
                                -2.0 * x * x + 3.0 * y * y + x);
       }},
  };
  for (const Probe& pr : probes) {
    const Eigen::VectorXd dofs = interpolate_dofs(grid, pr.k, pr.u);
    const ErrorPair err = compute_errors(grid, pr.k, dofs, pr.u, pr.grad);
    CHECK(!err.absolute);
    CHECK(err.e_h1 <= 1e-10);
    CHECK(err.e_l2 <= 1e-10);
    CHECK(err.h == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-12));
    CHECK(err.n_dofs == build_dof_map(grid, pr.k).total());
  }
}

TEST_CASE("constant datum degrades to flagged absolute errors") {
  const Mesh grid = gen_unit_square_mesh(2);
  const double c = 4.5;
  const ScalarField u = [&](const Eigen::Vector2d&) { return c; };
  const Eigen::VectorXd dofs = interpolate_dofs(grid, 2, u);
  const ErrorPair err = compute_errors(
      grid, 2, dofs, u, [](const Eigen::Vector2d&) { return Eigen::Vector2d::Zero().eval(); });
  CHECK(err.absolute);
  CHECK(err.e_h1 <= 1e-10);
  CHECK(err.e_l2 <= 1e-10);
}

TEST_CASE("errors do not depend on the element processing order") {
  const TestCase& tc = find_case("disk-u1");
  const Mesh disk = tc.make_mesh(0);
  Mesh shuffled = disk;
  std::swap(shuffled.elements[1], shuffled.elements[7]);

  const Eigen::VectorXd a = interpolate_dofs(disk, 2, tc.u);
  const Eigen::VectorXd b = interpolate_dofs(shuffled, 2, tc.u);
  const ErrorPair ea = compute_errors(disk, 2, a, tc.u, tc.grad_u);
  const ErrorPair eb = compute_errors(shuffled, 2, b, tc.u, tc.grad_u);
  CHECK(ea.e_h1 == doctest::Approx(eb.e_h1).epsilon(1e-13));
  CHECK(ea.e_l2 == doctest::Approx(eb.e_l2).epsilon(1e-13));
}

TEST_CASE("interpolant of the disk solution converges at order k") {
  const TestCase& tc = find_case("disk-u1");
  const int k = 2;
  double prev = 0.0, prev_h = 0.0;
  for (int level : {0, 1}) {
    const Mesh m = tc.make_mesh(level);
    const Eigen::VectorXd dofs = interpolate_dofs(m, k, tc.u);
    const ErrorPair err = compute_errors(m, k, dofs, tc.u, tc.grad_u);
    if (level > 0) {
      const double slope = std::log(prev / err.e_h1) / std::log(prev_h / err.h);
      CHECK(slope > 1.5);
      CHECK(slope < 2.6);
    }
    prev = err.e_h1;
    prev_h = err.h;
  }
}

TEST_CASE("slope fitting") {
  const std::vector<double> hs = {0.5, 0.25, 0.125, 0.0625};
  std::vector<double> quad(hs.size()), flat(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    quad[i] = hs[i] * hs[i];
    flat[i] = 0.7;
  }
  CHECK(fit_slope(hs, quad) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit_slope(hs, flat) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)fit_slope({0.5}, {0.1}), DomainError);
  CHECK_THROWS_AS((void)fit_slope({0.5, 0.25}, {0.1, 0.0}), DomainError);
  CHECK_THROWS_AS((void)fit_slope({0.5, 0.5}, {0.1, 0.1}), DomainError);
}

TEST_CASE("rate fitting produces global and pairwise slopes") {
  ConvergenceReport rep;
  rep.k = 3;
  rep.mesh_family = "synthetic";
  for (int i = 0; i < 4; ++i) {
    ErrorPair p;
    p.h = std::pow(0.5, i + 1);
    p.e_h1 = 3.0 * std::pow(p.h, 2.5);
    p.e_l2 = std::pow(p.h, 3.5);
    p.n_dofs = 100 * (i + 1);
    rep.levels.push_back(p);
  }
  const RateFit fit = fit_rates(rep);
  CHECK(fit.slope_h1 == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(fit.slope_l2 == doctest::Approx(3.5).epsilon(1e-12));
  REQUIRE(fit.pairwise_h1.size() == 3);
  REQUIRE(fit.pairwise_l2.size() == 3);
  for (double s : fit.pairwise_h1) CHECK(s == doctest::Approx(2.5).epsilon(1e-12));
  for (double s : fit.pairwise_l2) CHECK(s == doctest::Approx(3.5).epsilon(1e-12));

  ConvergenceReport tiny;
  tiny.levels.resize(1);
  CHECK_THROWS_AS((void)fit_rates(tiny), DomainError);
}

TEST_CASE("report csv schema") {
  ConvergenceReport rep;
  rep.k = 2;
  rep.mesh_family = "polar-disk";
  ErrorPair a;
  a.h = 0.5;
  a.e_h1 = 0.125;
  a.e_l2 = 0.0625;
  a.n_dofs = 40;
  ErrorPair b;
  b.h = 0.25;
  b.e_h1 = 0.03125;
  b.e_l2 = 0.0078125;
  b.n_dofs = 160;
  rep.levels = {a, b};
  rep.rates.slope_h1 = 2.0;
  rep.rates.slope_l2 = 3.0;
  std::ostringstream os;
  write_report_csv(os, rep);
  CHECK(os.str() ==
        "k,mesh_family,level,h,ndofs,EH1,EL2,slope_H1,slope_L2\n"
        "2,polar-disk,0,0.5,40,0.125,0.0625,2,3\n"
        "2,polar-disk,1,0.25,160,0.03125,0.0078125,2,3\n");
}
