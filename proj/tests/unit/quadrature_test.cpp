#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numeric>
#include <vector>

#include "dihedral/quadrature.hpp"

using namespace dihedral;
using doctest::Approx;

TEST_CASE("gauss_jacobi01 weights and exactness") {
  for (double a : {-0.5, 0.0, 0.7, 2.0}) {
    for (double b : {-0.3, 0.0, 1.5}) {
      const GaussRule rule = gauss_jacobi01(12, a, b);
      REQUIRE(rule.nodes.size() == 12);
      const double total = std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
      CHECK(total == Approx(boost::math::beta(a + 1, b + 1)).epsilon(1e-13));
      // Exact for polynomials of degree <= 23 against the weight.
      for (int d : {1, 5, 11, 23}) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          sum += rule.weights[i] * std::pow(rule.nodes[i], d);
          CHECK(rule.nodes[i] + rule.complements[i] == Approx(1.0).epsilon(1e-15));
        }
        CHECK(sum == Approx(boost::math::beta(a + 1 + d, b + 1)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("simplex product rule reproduces Dirichlet moments") {
  const std::vector<double> alphas{0.6, 1.0, 2.5, 1.3};
  const SimplexProductRule rule(alphas, 10);
  CHECK(rule.dimension() == 4);
  CHECK(rule.integrate([](std::span<const double>) { return 1.0; }) ==
        Approx(1.0).epsilon(1e-14));
  const double a0 = std::accumulate(alphas.begin(), alphas.end(), 0.0);
  // E[u_0 u_2^2] for Dirichlet(alphas), closed form via Gamma ratios.
  const double moment = alphas[0] * alphas[2] * (alphas[2] + 1) /
                        (a0 * (a0 + 1) * (a0 + 2));
  const double got =
      rule.integrate([](std::span<const double> u) { return u[0] * u[2] * u[2]; });
  CHECK(got == Approx(moment).epsilon(1e-13));
  rule.for_each([](std::span<const double> u, double w) {
    CHECK(w > 0.0);
    CHECK(std::accumulate(u.begin(), u.end(), 0.0) == Approx(1.0).epsilon(1e-14));
  });
}

TEST_CASE("log_dirichlet_normalizer") {
  const std::vector<double> alphas{1.0, 1.0, 1.0};
  CHECK(std::exp(log_dirichlet_normalizer(alphas)) == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("tanh_sinh_integrate handles endpoint singularities") {
  auto r = tanh_sinh_integrate([](double, double left, double) { return 1 / std::sqrt(left); },
                               0.0, 1.0, 1e-12);
  CHECK(r.value == Approx(2.0).epsilon(1e-11));
  // (b - x)^{-0.9} near b must use the right distance, which is exact there.
  auto s = tanh_sinh_integrate(
      [](double, double, double right) { return std::pow(right, -0.9); }, 0.0, 1.0, 1e-10);
  CHECK(s.value == Approx(10.0).epsilon(1e-8));
  auto t = tanh_sinh_integrate([](double x, double, double) { return std::exp(x); }, -1.0, 2.0,
                               1e-13);
  CHECK(t.value == Approx(std::exp(2.0) - std::exp(-1.0)).epsilon(1e-13));
}
