#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "curvem/basis.hpp"
#include "curvem/errors.hpp"

using namespace curvem;

TEST_CASE("graded lex index layout") {
  CHECK(mono::dim2(-1) == 0);
  CHECK(mono::dim2(0) == 1);
  CHECK(mono::dim2(1) == 3);
  CHECK(mono::dim2(4) == 15);

  CHECK(mono::index(0, 0) == 0);
  CHECK(mono::index(1, 0) == 1);
  CHECK(mono::index(0, 1) == 2);
  CHECK(mono::index(2, 0) == 3);
  CHECK(mono::index(1, 1) == 4);
  CHECK(mono::index(0, 2) == 5);

  for (int idx = 0; idx < mono::dim2(8); ++idx) {
    const auto a = mono::exponents(idx);
    CHECK(mono::index(a[0], a[1]) == idx);
  }

  CHECK(mono::product_index({1, 0}, {0, 1}) == mono::index(1, 1));
  CHECK(mono::product_index({2, 1}, {1, 3}) == mono::index(3, 4));
}

TEST_CASE("2D basis point values") {
  const ScaledMonomialBasis2D basis({1.0, 2.0}, 2.0, 3);
  REQUIRE(basis.size() == 10);
  const Eigen::VectorXd m = basis.eval({2.0, 1.0});  // scaled coords (0.5, -0.5)
  CHECK(m[mono::index(0, 0)] == doctest::Approx(1.0));
  CHECK(m[mono::index(1, 0)] == doctest::Approx(0.5));
  CHECK(m[mono::index(0, 1)] == doctest::Approx(-0.5));
  CHECK(m[mono::index(2, 1)] == doctest::Approx(-0.125));
  CHECK(m[mono::index(0, 3)] == doctest::Approx(-0.125));
}

TEST_CASE("gradients match finite differences") {
  const ScaledMonomialBasis2D basis({0.3, -0.2}, 1.7, 5);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const double step = 1e-6;
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::Vector2d x(unif(rng), unif(rng));
    const auto grad = basis.eval_grad(x);
    for (int c = 0; c < 2; ++c) {
      Eigen::Vector2d dx = Eigen::Vector2d::Zero();
      dx[c] = step;
      const Eigen::VectorXd fd = (basis.eval(x + dx) - basis.eval(x - dx)) / (2.0 * step);
      for (int i = 0; i < basis.size(); ++i)
        CHECK(grad(i, c) == doctest::Approx(fd[i]).epsilon(1e-7));
    }
  }
}

TEST_CASE("laplacian expansion matches finite differences") {
  const ScaledMonomialBasis2D basis({-0.1, 0.4}, 0.9, 4);
  const Eigen::MatrixXd lap = basis.laplacian_table();
  REQUIRE(lap.rows() == basis.size());
  REQUIRE(lap.cols() == mono::dim2(2));

  const ScaledMonomialBasis2D lower({-0.1, 0.4}, 0.9, 2);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unif(-0.3, 0.3);
  const double h = 1e-4;
  for (int trial = 0; trial < 4; ++trial) {
    const Eigen::Vector2d x(unif(rng), unif(rng));
    const Eigen::VectorXd expanded = lap * lower.eval(x);
    const Eigen::VectorXd fd =
        (basis.eval(x + Eigen::Vector2d(h, 0)) + basis.eval(x - Eigen::Vector2d(h, 0)) +
         basis.eval(x + Eigen::Vector2d(0, h)) + basis.eval(x - Eigen::Vector2d(0, h)) -
         4.0 * basis.eval(x)) /
        (h * h);
    for (int i = 0; i < basis.size(); ++i)
      CHECK(expanded[i] == doctest::Approx(fd[i]).epsilon(1e-5));
  }
}

TEST_CASE("1D basis: values, parity, domain data") {
  const ScaledMonomialBasis1D b(2.0, 6.0, 3);
  CHECK(b.midpoint() == doctest::Approx(4.0));
  CHECK(b.half_width() == doctest::Approx(2.0));
  const Eigen::VectorXd at5 = b.eval(5.0);  // scaled coordinate 0.5
  CHECK(at5[0] == doctest::Approx(1.0));
  CHECK(at5[1] == doctest::Approx(0.5));
  CHECK(at5[3] == doctest::Approx(0.125));

  // m_i(mid - s) = (-1)^i m_i(mid + s)
  const Eigen::VectorXd plus = b.eval(4.7), minus = b.eval(3.3);
  for (int i = 0; i <= 3; ++i)
    CHECK(minus[i] == doctest::Approx((i % 2 ? -1.0 : 1.0) * plus[i]).epsilon(1e-14));
}
