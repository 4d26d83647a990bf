#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <numeric>

#include "dihedral/dihedral_series.hpp"
#include "dihedral/random.hpp"
#include "dihedral/special.hpp"

using namespace dihedral;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
}  // namespace

TEST_CASE("params validation") {
  CHECK_THROWS_AS(DihedralParams(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DihedralParams(3, 0.0), std::invalid_argument);
  CHECK(DihedralParams(5, 0.7).gamma_exp() == 5 * 0.7);
}

TEST_CASE("bcoeffs sum to zero") {
  for (int n = 2; n <= 9; ++n) {
    const auto b = make_bcoeffs(0.37, n);
    REQUIRE(b.values.size() == static_cast<std::size_t>(n));
    CHECK(std::abs(std::accumulate(b.values.begin(), b.values.end(), 0.0)) <= 1e-12);
    CHECK(b.values[0] == Approx(std::cos(0.37 + 2 * kPi / n)));
  }
}

TEST_CASE("wedge_reduce") {
  const double d = 0.05;
  CHECK(wedge_reduce({2.0, kPi / 3 + d}, 3).angle == Approx(kPi / 3 - d).epsilon(1e-14));
  CHECK(wedge_reduce({2.0, 2 * kPi / 5}, 5).angle == Approx(0.0).epsilon(1e-14));
  CHECK(wedge_reduce({2.0, 0.3}, 4).angle == 0.3);
  CounterRng rng(3, 0);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 6;
    const double angle = 20 * (rng.uniform() - 0.5);
    const auto r = wedge_reduce({1.0, angle}, n);
    CHECK(r.angle >= 0.0);
    CHECK(r.angle <= kPi / n + 1e-15);
    CHECK(std::cos(n * r.angle) == Approx(std::cos(n * angle)).epsilon(1e-12));
  }
}

TEST_CASE("s_n_direct small cases") {
  const DihedralParams p(3, 1.0);
  CHECK(s_n_direct(p, 0.2, 0.4, 0) == Approx(1 / std::tgamma(3.0)).epsilon(1e-15));
  CHECK(s_n_direct(p, 0.2, 0.4, 1) == 0.0);
  // (j, m) in {(0, 3), (2, 0)} with C_2^{(1)}(cos(pi/2)) = -1:
  // 3 / (3! 6!) - 9 / 9! = 243 / 362880.
  CHECK(s_n_direct(p, 0.0, kPi / 6, 6) == Approx(243.0 / 362880.0).epsilon(1e-14));
}

TEST_CASE("s_n_closed small cases and capacity") {
  const DihedralParams p(3, 1.0);
  CHECK(s_n_closed(p, 0.2, 0.8, 0) == Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(s_n_closed(p, 0.2, 0.8, 1)) <= 1e-15);
  CHECK(s_n_closed(p, 0.2, 0.8, 4) == Approx(s_n_direct(p, 0.2, 0.8, 4)).epsilon(1e-13));
  CHECK_THROWS_AS(s_n_closed(DihedralParams(6, 1.0), 0.1, 0.2, 30, 1000), CapacityError);
}

TEST_CASE("finite-sum identity on random angles") {
  CounterRng rng(2024, 0);
  for (int n = 3; n <= 6; ++n) {
    for (double k : {0.3, 1.0, 2.5}) {
      const DihedralParams p(n, k);
      for (int t = 0; t < 5; ++t) {
        const double phi = rng.uniform() * kPi / n, theta = rng.uniform() * kPi / n;
        for (unsigned N = 0; N <= 10; ++N) {
          const double a = s_n_direct(p, phi, theta, N);
          const double b = s_n_closed(p, phi, theta, N);
          CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
        }
        for (unsigned N = 0; N <= 10; ++N) {
          CHECK(std::abs(s_n_closed(p, 0.0, theta, N) - s_n_boundary(p, theta, N)) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("normalization") {
  CounterRng rng(5, 0);
  for (int i = 0; i < 10; ++i) {
    const DihedralParams p(3 + i % 4, 0.4 + 0.3 * i);
    const PolarPoint y{4 * rng.uniform(), 2 * kPi * rng.uniform()};
    CHECK(eval_gegenbauer_series(p, {0.0, 0.0}, y).value == Approx(1.0).epsilon(1e-12));
    CHECK(eval_horn_series(p, {0.0, 0.3}, y).value == Approx(1.0).epsilon(1e-12));
    CHECK(boundary_horn(p, 0.0, y.radius, y.angle).value == Approx(1.0).epsilon(1e-12));
    CHECK_NOTHROW(verify_normalization(p));
  }
  CHECK(std::exp(log_normalization_constant(4, 1.0)) ==
        Approx(4 * std::tgamma(1.5) * std::tgamma(0.5) / std::tgamma(2.0) * std::tgamma(4.0))
            .epsilon(1e-13));
}

TEST_CASE("n = 2 reduces to a product of rank-one Bessel functions") {
  // Order-4 group with equal multiplicities: D = i_{k-1/2}(x1 y1) i_{k-1/2}(x2 y2).
  const double k = 0.8;
  const DihedralParams p(2, k);
  const PolarPoint x{1.3, 0.4}, y{0.9, 1.1};
  auto ik = [k](double t) {
    const double nu = k - 0.5;
    if (t == 0.0) return 1.0;
    return std::tgamma(nu + 1) * std::pow(2 / std::abs(t), nu) *
           boost::math::cyl_bessel_i(nu, std::abs(t));
  };
  const double oracle = ik(x.x1() * y.x1()) * ik(x.x2() * y.x2());
  CHECK(rel(eval_gegenbauer_series(p, x, y).value, oracle) <= 1e-12);
  CHECK(rel(eval_horn_series(p, x, y).value, oracle) <= 1e-12);
}

TEST_CASE("gegenbauer and horn series agree") {
  CHECK(rel(eval_horn_series(DihedralParams(3, 0.5), {1, 0.1}, {1, 0.4}).value,
            eval_gegenbauer_series(DihedralParams(3, 0.5), {1, 0.1}, {1, 0.4}).value) <= 1e-9);
  CHECK(rel(eval_horn_series(DihedralParams(5, 1.2), {1, 0.15}, {2, 0.45}).value,
            eval_gegenbauer_series(DihedralParams(5, 1.2), {1, 0.15}, {2, 0.45}).value) <=
        1e-9);
  const DihedralParams p4(4, 1.0);
  CHECK(rel(boundary_horn(p4, 1.5, 2.0, 0.3).value,
            eval_horn_series(p4, {1.5, 0.0}, {2.0, 0.3}).value) <= 1e-10);
}

TEST_CASE("boundary resummation through S_N") {
  // D = Gamma(nk) sum_N (rho r / 2)^N S_N, with S_N from the boundary route.
  const DihedralParams p(3, 0.7);
  const double rho = 1.1, r = 0.9, theta = 0.35;
  double sum = 0.0;
  for (unsigned N = 0; N <= 60; ++N) {
    sum += std::tgamma(3 * 0.7) * s_n_boundary(p, theta, N) * std::pow(rho * r / 2, N);
  }
  const double ref = boundary_horn(p, rho, r, theta).value;
  CHECK(rel(sum, ref) <= 1e-12);
}

TEST_CASE("group invariance, symmetry and positivity") {
  CounterRng rng(77, 0);
  for (int i = 0; i < 30; ++i) {
    const int n = 3 + i % 4;
    const double k = 0.5 + 0.25 * (i % 7);
    const DihedralParams p(n, k);
    const PolarPoint x{2 * rng.uniform(), 2 * kPi * rng.uniform()};
    const PolarPoint y{2 * rng.uniform(), 2 * kPi * rng.uniform()};
    const double d = eval_gegenbauer_series(p, x, y).value;
    CHECK(d > 0.0);
    CHECK(rel(eval_gegenbauer_series(p, y, x).value, d) <= 1e-10);
    CHECK(rel(eval_gegenbauer_series(p, x, {y.radius, y.angle + 2 * kPi / n}).value, d) <=
          1e-10);
    CHECK(rel(eval_gegenbauer_series(p, x, {y.radius, -y.angle}).value, d) <= 1e-10);
    CHECK(rel(eval_gegenbauer_series(p, {x.radius, -x.angle}, y).value, d) <= 1e-10);
    CHECK(rel(eval_horn_series(p, x, {y.radius, -y.angle}).value, d) <= 1e-9);
  }
}
