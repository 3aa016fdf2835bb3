#include <doctest.h>

#include <cmath>

#include "curvem/gauss.hpp"

using namespace curvem;

namespace {

double integrate_pow(const Gauss1D& rule, int d) {
  double acc = 0.0;
  for (int q = 0; q < rule.nodes.size(); ++q)
    acc += rule.weights[q] * std::pow(rule.nodes[q], d);
  return acc;
}

}  // namespace

TEST_CASE("reference rules: weight sum and node symmetry") {
  for (int n = 1; n <= 20; ++n) {
    const Gauss1D& rule = gauss_legendre(n);
    REQUIRE(rule.nodes.size() == n);
    CHECK(rule.weights.sum() == doctest::Approx(2.0).epsilon(1e-14));
    for (int q = 0; q < n; ++q) {
      CHECK(rule.nodes[q] == doctest::Approx(-rule.nodes[n - 1 - q]).epsilon(1e-14));
      CHECK(rule.weights[q] > 0.0);
    }
  }
}

TEST_CASE("exactness up to degree 2n-1") {
  for (int n = 1; n <= 12; ++n) {
    const Gauss1D& rule = gauss_legendre(n);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      const double exact = (d % 2 == 0) ? 2.0 / (d + 1) : 0.0;
      CHECK(std::abs(integrate_pow(rule, d) - exact) < 1e-13);
    }
    // One degree beyond, the rule must NOT be exact (sanity that the order
    // claim is sharp).
    const double beyond = integrate_pow(rule, 2 * n);
    CHECK(std::abs(beyond - 2.0 / (2 * n + 1)) > 1e-10);
  }
}

TEST_CASE("mapped rule integrates on [a, b]") {
  const Gauss1D rule = gauss_on_interval(0.0, 1.0, 2);
  CHECK(rule.weights.sum() == doctest::Approx(1.0).epsilon(1e-15));
  double cubic = 0.0;
  for (int q = 0; q < rule.nodes.size(); ++q)
    cubic += rule.weights[q] * std::pow(rule.nodes[q], 3);
  CHECK(cubic == doctest::Approx(0.25).epsilon(1e-14));

  const Gauss1D wide = gauss_on_interval(-2.0, 5.0, 6);
  CHECK(wide.weights.sum() == doctest::Approx(7.0).epsilon(1e-14));
  for (int q = 0; q < wide.nodes.size(); ++q) {
    CHECK(wide.nodes[q] > -2.0);
    CHECK(wide.nodes[q] < 5.0);
  }
}

TEST_CASE("point count for target degree") {
  CHECK(gauss_points_for_degree(0) == 1);
  CHECK(gauss_points_for_degree(1) == 1);
  CHECK(gauss_points_for_degree(2) == 2);
  CHECK(gauss_points_for_degree(7) == 4);
  CHECK(gauss_points_for_degree(8) == 5);
}
