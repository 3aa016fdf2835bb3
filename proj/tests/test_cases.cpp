#include "curvem/cases.hpp"

#include <doctest.h>

#include <cmath>

#include "curvem/errors.hpp"
#include "helpers.hpp"

using namespace curvem;

namespace {

double fd_laplacian(const ScalarField& u, const Eigen::Vector2d& p, double h) {
  const Eigen::Vector2d ex(h, 0.0), ey(0.0, h);
  return (u(p + ex) + u(p - ex) + u(p + ey) + u(p - ey) - 4.0 * u(p)) / (h * h);
}

Eigen::Vector2d fd_gradient(const ScalarField& u, const Eigen::Vector2d& p, double h) {
  const Eigen::Vector2d ex(h, 0.0), ey(0.0, h);
  return {(u(p + ex) - u(p - ex)) / (2.0 * h), (u(p + ey) - u(p - ey)) / (2.0 * h)};
}

}  // namespace

TEST_CASE("registry lookup") {
  CHECK(case_names().size() == 4);
  CHECK(find_case("disk-u1").mesh_family == "polar-disk");
  CHECK(find_case("sine-u2").mesh_family == "mapped-sine");
  CHECK(find_case("interface-u3").mesh_family == "polar-interface");
  CHECK(find_case("straight-approx-u2").mesh_family == "straight-sine");
  CHECK_THROWS_AS((void)find_case("disk-u9"), DomainError);
}

TEST_CASE("disk solution satisfies its data") {
  const TestCase& tc = find_case("disk-u1");
  const Eigen::Vector2d p(0.31, -0.47);
  CHECK(tc.f(p) == doctest::Approx(2.0 * M_PI * M_PI * tc.u(p)).epsilon(1e-14));
  CHECK(tc.g(p) == tc.u(p));
  const Eigen::Vector2d fd = fd_gradient(tc.u, p, 1e-6);
  CHECK((tc.grad_u(p) - fd).norm() < 1e-8);
  CHECK(-fd_laplacian(tc.u, p, 1e-4) == doctest::Approx(tc.f(p)).epsilon(1e-5));
}

TEST_CASE("sine-domain solution matches an independent symbolic evaluation") {
  const TestCase& tc = find_case("sine-u2");
  struct Ref {
    double x, y, u, ux, uy, f;
  };
  // Frozen from a computer-algebra evaluation of -(y-g1)(y-g2)(1-x)x(3+sin5x sin7y).
  const Ref refs[] = {
      {0.3, 0.4, 0.1549372849342861521946, 0.1480116485711311931948,
       -0.1265514851735424825148, 5.418879571746436635078},
      {0.7, 0.2, 0.07252120041872734931725, -0.1823782673163132179513,
       0.3542015847853573646862, 1.231959517145783326761},
      {0.5, 0.9, 0.03198191566765720645912, -0.0007156122919785405897580,
       -0.5575074567846291118572, 0.5848762472511006935080},
      {0.12, 0.55, 0.07318977853185608092754, 0.4616454451211884825888,
       -0.09355156736109999399527, 2.705035089848977420058},
  };
  for (const Ref& r : refs) {
    const Eigen::Vector2d p(r.x, r.y);
    CHECK(tc.u(p) == doctest::Approx(r.u).epsilon(1e-14));
    CHECK(tc.grad_u(p).x() == doctest::Approx(r.ux).epsilon(1e-13));
    CHECK(tc.grad_u(p).y() == doctest::Approx(r.uy).epsilon(1e-13));
    CHECK(tc.f(p) == doctest::Approx(r.f).epsilon(1e-13));
  }
  // Independent in-code check: the load is the negative FD Laplacian.
  for (const Eigen::Vector2d& p :
       {Eigen::Vector2d(0.41, 0.62), Eigen::Vector2d(0.83, 0.35)}) {
    CHECK(-fd_laplacian(tc.u, p, 1e-4) == doctest::Approx(tc.f(p)).epsilon(1e-5));
    CHECK((tc.grad_u(p) - fd_gradient(tc.u, p, 1e-6)).norm() < 1e-8);
  }
}

TEST_CASE("sine-domain solution vanishes on the curved boundary") {
  const TestCase& tc = find_case("sine-u2");
  auto g1 = [](double x) { return std::sin(M_PI * x) / 20.0; };
  auto g2 = [](double x) { return 1.0 + std::sin(3.0 * M_PI * x) / 20.0; };
  for (double x : {0.1, 0.37, 0.62, 0.95}) {
    CHECK(std::abs(tc.u({x, g1(x)})) < 1e-15);
    CHECK(std::abs(tc.u({x, g2(x)})) < 1e-15);
  }
  for (double y : {0.2, 0.5, 0.8}) {
    CHECK(tc.u({0.0, y}) == 0.0);
    CHECK(tc.u({1.0, y}) == 0.0);
  }
}

TEST_CASE("interface solution: continuity, flux balance, and the strong equation") {
  const TestCase& tc = find_case("interface-u3");
  const Eigen::Vector2d dir = Eigen::Vector2d(0.6, 0.8).normalized();

  // Value continuity across r = 1/2.
  const double eps = 1e-9;
  const double inner = tc.u(dir * (0.5 - eps));
  const double outer = tc.u(dir * (0.5 + eps));
  CHECK(std::abs(inner - outer) < 1e-8);

  // kappa du/dr is -5/4 from both sides.
  const double flux_in = 1.0 * tc.grad_u(dir * (0.5 - eps)).dot(dir);
  const double flux_out = 5.0 * tc.grad_u(dir * (0.5 + eps)).dot(dir);
  CHECK(flux_in == doctest::Approx(-1.25).epsilon(1e-7));
  CHECK(flux_out == doctest::Approx(-1.25).epsilon(1e-7));

  // -kappa lap(u) = f in each subdomain, and u = 0 on the unit circle.
  const Eigen::Vector2d pin = dir * 0.3, pout = dir * 0.75;
  CHECK(-1.0 * fd_laplacian(tc.u, pin, 1e-5) == doctest::Approx(tc.f(pin)).epsilon(1e-6));
  CHECK(-5.0 * fd_laplacian(tc.u, pout, 1e-5) == doctest::Approx(tc.f(pout)).epsilon(1e-6));
  CHECK(tc.f(pin) == 5.0);
  CHECK(tc.f(pout) == 1.0);
  CHECK(std::abs(tc.u(dir)) < 1e-15);
  CHECK((tc.grad_u(pin) - fd_gradient(tc.u, pin, 1e-6)).norm() < 1e-8);
  CHECK((tc.grad_u(pout) - fd_gradient(tc.u, pout, 1e-6)).norm() < 1e-8);

  // r = 1/2 exactly takes the inner branch.
  CHECK(tc.u(dir * 0.5) == doctest::Approx(inner).epsilon(1e-8));
  CHECK(tc.f(dir * 0.5) == 5.0);
}

TEST_CASE("mesh families per level") {
  const TestCase& disk = find_case("disk-u1");
  const Mesh d0 = disk.make_mesh(0);
  CHECK(d0.elements.size() == 12);  // paired fan: 8/2 center + 8 annular
  CHECK(d0.finalized);
  const Mesh d1 = disk.make_mesh(1);
  CHECK(d1.elements.size() == 16 / 2 + 3 * 16);
  CHECK(d1.mesh_size() < d0.mesh_size());

  const Mesh s0 = find_case("sine-u2").make_mesh(0);
  CHECK(s0.elements.size() == 16);
  CHECK(!s0.curves.empty());

  const Mesh i0 = find_case("interface-u3").make_mesh(0);
  for (const Element& el : i0.elements) {
    const double expected = el.centroid.norm() < 0.5 ? 1.0 : 5.0;
    CHECK(el.kappa == expected);
  }

  const Mesh st = find_case("straight-approx-u2").make_mesh(0);
  CHECK(st.elements.size() == 256);  // 16 x 16 alternating-column grid
  for (const Edge& e : st.edges) CHECK(e.curve < 0);
}
