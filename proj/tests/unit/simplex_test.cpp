#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "dihedral/simplex_integral.hpp"

using namespace dihedral;

TEST_CASE("dirichlet_sample") {
  const std::vector<double> flat{1.0, 1.0, 1.0, 1.0};
  const auto pts = dirichlet_sample(flat, 100000, 42);
  REQUIRE(pts.size() == 100000);
  double s = 0, s2 = 0;
  for (const auto& p : pts) {
    REQUIRE(p.is_valid());
    s += p.u0();
    s2 += p.u0() * p.u0();
  }
  const double mean = s / pts.size();
  const double se = std::sqrt((s2 / pts.size() - mean * mean) / pts.size());
  CHECK(std::abs(mean - 0.25) <= 3 * se);

  const std::vector<double> skew{2.0, 1.0, 1.0};
  const auto q = dirichlet_sample(skew, 100000, 7);
  double m1 = 0, m1sq = 0;
  for (const auto& p : q) {
    m1 += p.coords[0];
    m1sq += p.coords[0] * p.coords[0];
  }
  const double mean1 = m1 / q.size();
  CHECK(std::abs(mean1 - 0.5) <= 3 * std::sqrt((m1sq / q.size() - mean1 * mean1) / q.size()));

  // Sample i depends only on (seed, i).
  const auto head = dirichlet_sample(flat, 10, 42);
  for (std::size_t i = 0; i < head.size(); ++i) CHECK(head[i].coords == pts[i].coords);
}

TEST_CASE("dirichlet moment check") {
  const std::vector<double> ones{1.0, 1.0, 1.0};
  const std::vector<double> two{2.0, 1.0, 1.0};
  const std::vector<double> mixed{1.5, 3.25, 1.0, 2.0};
  for (const auto& b : {ones, two, mixed}) {
    CHECK(std::abs(dirichlet_moment_check(b, QuadratureScheme::product(12)).value - 1) <= 1e-8);
  }
  const std::vector<double> halves{0.5, 0.5, 0.5};
  const auto mc = dirichlet_moment_check(halves, QuadratureScheme::monte_carlo(400000));
  CHECK(std::abs(mc.value - 1) <= 1e-3 + 3 * mc.error);
}

TEST_CASE("simplex expectation scheme handling") {
  const std::vector<double> a{1.0, 1.0, 1.0};
  auto fn = [](std::span<const double> u) { return u[0]; };
  CHECK_THROWS_AS(simplex_expectation(a, QuadratureScheme::double_exponential(), {}, fn),
                  std::invalid_argument);
  EvalConfig tight;
  tight.sample_budget = 10;
  CHECK_THROWS_AS(simplex_expectation(a, QuadratureScheme::monte_carlo(100), tight, fn),
                  CapacityError);
}

TEST_CASE("simplex integral normalization and boundary case") {
  const DihedralParams p(4, 1.0);
  CHECK(eval_simplex_integral(p, {0.0, 0.0}, {1.7, 0.3}, QuadratureScheme::product(8)).value ==
        doctest::Approx(1.0).epsilon(1e-14));
  const auto mc = eval_simplex_integral(p, {1.0, 0.0}, {2.0, 0.5},
                                        QuadratureScheme::monte_carlo(200000));
  const double ref = boundary_horn(p, 1.0, 2.0, 0.5).value;
  CHECK(std::abs(mc.value - ref) <= 3 * mc.error);
  CHECK_THROWS_AS(eval_simplex_integral(DihedralParams(2, 1.0), {1, 0}, {1, 0},
                                        QuadratureScheme::product(8)),
                  std::invalid_argument);
}

TEST_CASE("simplex integral against horn series") {
  const DihedralParams p(3, 1.5);
  const PolarPoint x{1.2, 0.2}, y{1.2, 0.6};
  const double ref = eval_horn_series(p, x, y).value;
  const auto mc = eval_simplex_integral(p, x, y, QuadratureScheme::monte_carlo(1000000));
  CHECK(std::abs(mc.value - ref) <= 3 * mc.error);
  const auto pr = eval_simplex_integral(p, x, y, QuadratureScheme::product(24));
  CHECK(std::abs(pr.value - ref) <= 1e-9 * ref);

  const DihedralParams q(5, 0.5);
  const PolarPoint x5{1.5, 0.5}, y5{2.0, 0.1};
  CHECK(std::abs(eval_simplex_integral(q, x5, y5, QuadratureScheme::product(32)).value -
                 eval_horn_series(q, x5, y5).value) <= 1e-7);
}

TEST_CASE("monte carlo error shrinks like one over root n") {
  const DihedralParams p(3, 1.0);
  const PolarPoint x{1.5, 0.3}, y{1.5, 0.7};
  double ratio_sum = 0;
  for (int rep = 0; rep < 10; ++rep) {
    QuadratureScheme a = QuadratureScheme::monte_carlo(20000, 100 + rep);
    QuadratureScheme b = QuadratureScheme::monte_carlo(40000, 100 + rep);
    ratio_sum += eval_simplex_integral(p, x, y, b).error / eval_simplex_integral(p, x, y, a).error;
  }
  CHECK(std::abs(ratio_sum / 10 - 1 / std::sqrt(2.0)) <= 0.2 / std::sqrt(2.0));
}

TEST_CASE("integrand dominates the exponential factor when the cross term is nonnegative") {
  const DihedralParams p(4, 0.8);
  // sin(4 theta) sin(4 phi) < 0 gives X > 0.
  const SimplexKernel kernel(p, {1.3, 0.2}, {1.1, -0.3});
  CHECK(kernel.cross() > 0.0);
  const auto pts = dirichlet_sample(std::vector<double>(4, 0.8), 1000, 3);
  for (const auto& u : pts) {
    CHECK(kernel(u.coords) >= kernel.exp_factor(u.coords));
  }
}
