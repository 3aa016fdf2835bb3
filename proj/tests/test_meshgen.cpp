#include <doctest.h>

#include <cmath>

#include "curvem/errors.hpp"
#include "curvem/meshgen.hpp"

using namespace curvem;

namespace {

int count_curved_boundary(const Mesh& m) {
  int n = 0;
  for (size_t i = 0; i < m.edges.size(); ++i)
    if (m.edges[i].curved() && m.boundary(static_cast<int>(i))) ++n;
  return n;
}

double total_area(const Mesh& m) {
  double a = 0.0;
  for (const Element& el : m.elements) a += el.area;
  return a;
}

}  // namespace

TEST_CASE("one-ring disk: plain fan counts") {
  const Mesh m = gen_polar_disk_mesh(1, 4, false);
  CHECK(m.elements.size() == 4);
  CHECK(count_curved_boundary(m) == 4);
  CHECK(total_area(m) == doctest::Approx(M_PI).epsilon(1e-12));
  CHECK(mesh_validate(m, 0.1).pass);
}

TEST_CASE("multi-ring disk: paired fan, annular quads, disk area") {
  const Mesh m = gen_polar_disk_mesh(4, 16, false);
  CHECK(m.elements.size() == 16 / 2 + 3 * 16);
  CHECK(count_curved_boundary(m) == 16);
  CHECK(total_area(m) == doctest::Approx(M_PI).epsilon(1e-12));

  // Center elements pair two sectors: 2 radials + 2 chords.
  CHECK(m.elements[0].edges.size() == 4);
}

TEST_CASE("chord-polygon area approaches pi at second order in the sector count") {
  double prev_gap = -1.0;
  for (int s : {8, 16, 32, 64}) {
    const Mesh m = strip_curves(gen_polar_disk_mesh(std::max(2, s / 4), s, false));
    const double gap = M_PI - total_area(m);
    CHECK(gap > 0.0);
    CHECK(gap < 21.0 / (s * s));
    if (prev_gap > 0.0) CHECK(prev_gap / gap == doctest::Approx(4.0).epsilon(0.05));
    prev_gap = gap;
  }
}

TEST_CASE("validator passes on the acceptance polar family at rho = 0.05") {
  for (int s : {8, 16, 32, 64}) {
    const Mesh m = gen_polar_disk_mesh(s / 4, s, false);
    const ValidationReport rep = mesh_validate(m, 0.05);
    CHECK(rep.pass);
  }
}

TEST_CASE("interface mesh: r=1/2 arcs are curved interior edges, kappa split") {
  const Mesh m = gen_polar_disk_mesh(4, 16, true);
  REQUIRE(m.curves.size() == 2);
  CHECK(m.curves[1].radius == doctest::Approx(0.5));

  int interface_edges = 0;
  for (size_t i = 0; i < m.edges.size(); ++i) {
    const Edge& e = m.edges[i];
    if (e.curve == 1) {
      ++interface_edges;
      CHECK_FALSE(m.boundary(static_cast<int>(i)));  // interior, canonically shared
    }
  }
  CHECK(interface_edges == 16);

  // The diffusion split follows the exact interface solution: kappa = 1 on
  // the inner disk, 5 on the annulus.
  for (const Element& el : m.elements) {
    const double rc = el.centroid.norm();
    if (rc < 0.5)
      CHECK(el.kappa == doctest::Approx(1.0));
    else
      CHECK(el.kappa == doctest::Approx(5.0));
  }
  CHECK(mesh_validate(m, 0.05).pass);
}

TEST_CASE("interface flag needs an even ring count") {
  CHECK_THROWS_AS(gen_polar_disk_mesh(3, 12, true), DomainError);
  CHECK_NOTHROW(gen_polar_disk_mesh(2, 12, true));
  CHECK_THROWS_AS(gen_polar_disk_mesh(0, 8, false), DomainError);
  CHECK_THROWS_AS(gen_polar_disk_mesh(2, 2, false), DomainError);
}

TEST_CASE("square mapping rule: pinned nodes") {
  const Eigen::Vector2d bottom = map_square_point({0.5, 0.0});
  CHECK(bottom.x() == doctest::Approx(0.5));
  CHECK(bottom.y() == doctest::Approx(0.05));  // g1(1/2) = sin(pi/2)/20

  const Eigen::Vector2d mid = map_square_point({0.37, 0.5});
  CHECK(mid.x() == doctest::Approx(0.37));
  CHECK(mid.y() == doctest::Approx(0.5));  // both branches fix y = 1/2

  const Eigen::Vector2d top = map_square_point({0.25, 1.0});
  CHECK(top.y() == doctest::Approx(1.0 + 0.05 * std::sin(3.0 * M_PI * 0.25)));
}

TEST_CASE("mapped square mesh: counts, curved rows, area") {
  const Mesh m = gen_mapped_square_mesh(2);
  CHECK(m.elements.size() == 4);
  CHECK(count_curved_boundary(m) == 4);

  const Mesh fine = gen_mapped_square_mesh(8);
  // |Omega| = 1 + (1/20) int_0^1 (sin(3 pi x) - sin(pi x)) dx = 1 - 1/(15 pi)
  CHECK(total_area(fine) == doctest::Approx(1.0 - 1.0 / (15.0 * M_PI)).epsilon(1e-12));
  CHECK(mesh_validate(fine, 0.05).pass);

  // Bottom/top boundary edges are bound with parameter = x, increasing.
  for (size_t i = 0; i < fine.edges.size(); ++i) {
    const Edge& e = fine.edges[i];
    if (!e.curved()) continue;
    CHECK(fine.boundary(static_cast<int>(i)));
    CHECK(e.t0 == doctest::Approx(fine.vertices[e.v0].x()));
    CHECK(e.t1 == doctest::Approx(fine.vertices[e.v1].x()));
    CHECK(e.t0 < e.t1);
  }
}

TEST_CASE("unit square grid: straight patch-test mesh") {
  const Mesh m = gen_unit_square_mesh(4);
  CHECK(m.elements.size() == 16);
  CHECK(total_area(m) == doctest::Approx(1.0).epsilon(1e-14));
  for (const Edge& e : m.edges) CHECK_FALSE(e.curved());
  CHECK(mesh_validate(m, 0.1).pass);
}

TEST_CASE("alternating square grid: 2:1 column widths tile the unit interval") {
  const Mesh m = gen_alternating_square_mesh(6);
  CHECK(m.elements.size() == 36);
  CHECK(total_area(m) == doctest::Approx(1.0).epsilon(1e-14));

  // Columns 0..5 have widths (2/9, 1/9) repeating; x_6 lands exactly on 1.
  std::vector<double> xs;
  for (int i = 0; i <= 6; ++i) xs.push_back(m.vertices[static_cast<size_t>(i)].x());
  for (int i = 0; i < 6; ++i) {
    const double expected = (i % 2 == 0) ? 2.0 / 9.0 : 1.0 / 9.0;
    CHECK(xs[static_cast<size_t>(i) + 1] - xs[static_cast<size_t>(i)] ==
          doctest::Approx(expected).epsilon(1e-13));
  }
  CHECK(xs.back() == 1.0);
  CHECK(mesh_validate(m, 0.1).pass);

  CHECK_THROWS_AS(gen_alternating_square_mesh(5), DomainError);
  CHECK_THROWS_AS(gen_alternating_square_mesh(4, 0.0), DomainError);

  // The mapping rule accepts it like any square grid: curved rows bind.
  const Mesh curved = map_unit_square_mesh(gen_alternating_square_mesh(4));
  CHECK(count_curved_boundary(curved) == 8);
  CHECK(mesh_validate(curved, 0.05).pass);
}
