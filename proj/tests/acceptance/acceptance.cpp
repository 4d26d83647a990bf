// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances are fixed here; every reference value is
// computed by an independent route, never hard-coded.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "dihedral/dihedral_series.hpp"
#include "dihedral/identities.hpp"
#include "dihedral/laplace.hpp"
#include "dihedral/random.hpp"
#include "dihedral/simplex_integral.hpp"
#include "dihedral/special.hpp"

using namespace dihedral;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = true;
  double worst = 0.0;  // largest deviation, or deviation / tolerance for mixed rules
  std::string detail;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Crit 1: finite-sum identity, both sides computed independently.
Outcome finite_sum_identity() {
  constexpr double kTol = 1e-10;
  Outcome o;
  std::size_t cases = 0;
  for (int n = 3; n <= 6; ++n) {
    for (double k : {0.3, 0.7, 1.0, 1.5, 2.5}) {
      const DihedralParams params(n, k);
      CounterRng rng(1, 1000 * n + static_cast<std::uint64_t>(10 * k));
      for (int pair = 0; pair < 20; ++pair) {
        const double phi = rng.uniform() * kPi / n, theta = rng.uniform() * kPi / n;
        for (unsigned N = 0; N <= 10; ++N) {
          const double a = s_n_direct(params, phi, theta, N);
          const double b = s_n_closed(params, phi, theta, N);
          o.worst = std::max(o.worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
          ++cases;
        }
      }
    }
  }
  o.passed = o.worst <= kTol;
  o.detail = std::to_string(cases) + " cases, tol 1e-10";
  return o;
}

// Crit 2: boundary case of the closed form vs the product generating function.
Outcome boundary_specialization() {
  constexpr double kTol = 1e-12;
  Outcome o;
  std::size_t cases = 0;
  for (int n = 3; n <= 6; ++n) {
    for (double k : {0.3, 0.7, 1.0, 1.5, 2.5}) {
      const DihedralParams params(n, k);
      CounterRng rng(2, 1000 * n + static_cast<std::uint64_t>(10 * k));
      for (int pair = 0; pair < 20; ++pair) {
        const double theta = rng.uniform() * kPi / n;
        for (unsigned N = 0; N <= 10; ++N) {
          const double a = s_n_closed(params, 0.0, theta, N);
          const double b = s_n_boundary(params, theta, N);
          o.worst = std::max(o.worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
          ++cases;
        }
      }
    }
  }
  o.passed = o.worst <= kTol;
  o.detail = std::to_string(cases) + " cases, tol 1e-12";
  return o;
}

struct RandomPoint {
  int n;
  double k;
  PolarPoint x;
  PolarPoint y;
};

// rho r <= max_product, angles anywhere in the plane.
RandomPoint random_point(CounterRng& rng, int n, double k, double max_product) {
  const double side = std::sqrt(max_product);
  return {n, k, {side * rng.uniform(), 2 * kPi * rng.uniform()},
          {side * rng.uniform(), 2 * kPi * rng.uniform()}};
}

// Crit 3: the two series representations.
Outcome series_vs_series() {
  constexpr double kTol = 1e-9;
  Outcome o;
  CounterRng rng(3, 0);
  const double ks[] = {0.5, 1.0, 2.5};
  for (int i = 0; i < 50; ++i) {
    const auto pt = random_point(rng, 3 + i % 4, ks[i % 3], 4.0);
    const DihedralParams params(pt.n, pt.k);
    o.worst = std::max(o.worst, rel(eval_horn_series(params, pt.x, pt.y).value,
                                    eval_gegenbauer_series(params, pt.x, pt.y).value));
  }
  o.passed = o.worst <= kTol;
  o.detail = "50 points, tol 1e-9 relative";
  return o;
}

// Crit 4: simplex integral by Dirichlet Monte Carlo vs the series.
Outcome series_vs_simplex() {
  constexpr std::size_t kSamples = 1'000'000;
  Outcome o;
  CounterRng rng(4, 0);
  const double ks[] = {0.5, 1.0, 2.0};
  double worst_sigma = 0.0;
  for (int i = 0; i < 15; ++i) {
    const auto pt = random_point(rng, 3 + i % 3, ks[(i / 3) % 3], 4.0);
    const DihedralParams params(pt.n, pt.k);
    const double ref = eval_gegenbauer_series(params, pt.x, pt.y).value;
    const auto mc = eval_simplex_integral(params, pt.x, pt.y,
                                          QuadratureScheme::monte_carlo(kSamples, 100 + i));
    const double tol = std::max(3 * mc.error, 1e-2 * std::abs(ref));
    const double dev = std::abs(mc.value - ref);
    o.worst = std::max(o.worst, dev / tol);
    worst_sigma = std::max(worst_sigma, dev / mc.error);
    o.passed = o.passed && dev <= tol;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "15 points, 1e6 samples, max dev/tol shown, max %.2f sigma",
                worst_sigma);
  o.detail = buf;
  return o;
}

// Crit 5: boundary form vs series, and Laplace form vs boundary form.
Outcome laplace_chain() {
  Outcome o;
  CounterRng rng(5, 0);
  double worst_boundary = 0.0, worst_laplace = 0.0;
  for (int p : {1, 2, 3}) {
    for (double k : {0.5, 1.0, 1.5}) {
      const EvenDihedralParams params(p, k);
      for (int i = 0; i < 3; ++i) {
        const double rho = 2 * rng.uniform();
        const PolarPoint y{2 * rng.uniform(), 2 * kPi * rng.uniform()};
        const double ref =
            eval_gegenbauer_series(params.as_dihedral(), {rho, 0.0}, y).value;
        const auto mc = eval_boundary_bessel(params, rho, y,
                                             QuadratureScheme::monte_carlo(200000, 7 + i));
        const double tol = std::max(3 * mc.error, 1e-3 * std::abs(ref));
        worst_boundary = std::max(worst_boundary, std::abs(mc.value - ref) / tol);
        o.passed = o.passed && std::abs(mc.value - ref) <= tol;

        if (p < 2 || !(params.nu() > 0.0)) continue;
        const auto scheme = QuadratureScheme::product(24);
        const double lap = eval_laplace(params, rho, y, scheme).value;
        const double bnd = eval_boundary_bessel(params, rho, y, scheme).value;
        worst_laplace = std::max(worst_laplace, rel(lap, bnd));
        o.passed = o.passed && rel(lap, bnd) <= 1e-4;
      }
    }
  }
  o.worst = worst_laplace;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "boundary vs series max dev/tol %.3f (tol max(3 sigma, 1e-3)); "
                "laplace vs boundary tol 1e-4",
                worst_boundary);
  o.detail = buf;
  return o;
}

// Crit 6: disk integral with K = (pk - 1/2) / pi vs the Bessel series.
Outcome disk_identity() {
  constexpr double kTol = 1e-6;
  Outcome o;
  const auto scheme = QuadratureScheme::double_exponential(1e-12);
  for (double pk : {0.8, 1.0, 1.5, 2.5}) {
    for (double r : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0}) {
      for (double a : {0.0, 0.9, 2.3, 4.0}) {
        const Point2 w{r * std::cos(a), r * std::sin(a)};
        const double integral = disk_integral(pk, w, scheme);
        const double series = bessel_i_norm(pk - 0.5, r).value;
        o.worst = std::max(o.worst, rel(integral, series));
      }
    }
  }
  o.passed = o.worst <= kTol;
  o.detail = "96 cases, tanh-sinh radial rule, tol 1e-6";
  return o;
}

// Crit 7: normalization, symmetry and group invariance.
Outcome normalization_symmetry() {
  Outcome o;
  CounterRng rng(7, 0);
  double worst_norm = 0.0, worst_sym = 0.0;
  for (int i = 0; i < 12; ++i) {
    const int n = 3 + i % 4;
    const DihedralParams params(n, 0.4 + 0.2 * i);
    const auto pt = random_point(rng, n, params.k(), 4.0);
    for (auto eval : {eval_gegenbauer_series, eval_horn_series}) {
      auto d = [&](PolarPoint x, PolarPoint y) { return eval(params, x, y, {}).value; };
      worst_norm = std::max(worst_norm, std::abs(d({0.0, pt.x.angle}, pt.y) - 1.0));
      const double base = d(pt.x, pt.y);
      const double rot = 2 * kPi / n;
      for (double v : {d(pt.y, pt.x), d(pt.x, {pt.y.radius, pt.y.angle + rot}),
                       d(pt.x, {pt.y.radius, -pt.y.angle}),
                       d({pt.x.radius, pt.x.angle + rot}, pt.y),
                       d({pt.x.radius, -pt.x.angle}, pt.y)}) {
        worst_sym = std::max(worst_sym, rel(v, base));
      }
    }
  }
  o.passed = worst_norm <= 1e-12 && worst_sym <= 1e-10;
  o.worst = worst_sym;
  char buf[128];
  std::snprintf(buf, sizeof buf, "12 configs x 2 series; |D(0,y)-1| max %.2e (tol 1e-12), "
                "symmetry tol 1e-10", worst_norm);
  o.detail = buf;
  return o;
}

// Crit 8: support bound and total mass of the density.
Outcome support_and_mass() {
  Outcome o;
  const auto ts = QuadratureScheme::double_exponential(1e-8);
  std::size_t nonzero = 0;
  for (int p : {2, 3}) {
    const EvenDihedralParams params(p, 1.0);
    const double rho = 1.0;
    CounterRng rng(8, p);
    for (int i = 0; i < 1000; ++i) {
      // |z| in (rho, 2 rho], biased toward the circle where the bound is tight.
      const double r = rho * (1.0 + std::pow(rng.uniform(), 3));
      const double a = 2 * kPi * rng.uniform();
      if (density_h(params, rho, {r * std::cos(a), r * std::sin(a)}, ts) != 0.0) ++nonzero;
    }
  }
  double worst_mass = 0.0;
  for (int p : {2, 3}) {
    const auto mass = density_total_mass(EvenDihedralParams(p, 1.0), 1.0, ts, 20);
    worst_mass = std::max(worst_mass, std::abs(mass.value - 1.0));
  }
  o.passed = nonzero == 0 && worst_mass <= 1e-4;
  o.worst = worst_mass;
  o.detail = std::to_string(nonzero) +
             " nonzero of 2000 probes with |z| > rho; total mass k = 1, tol 1e-4";
  return o;
}

// Crit 9: auxiliary identity suites at their stated tolerances.
Outcome auxiliary_identities() {
  Outcome o;
  std::string failed;
  for (const char* name :
       {"duplication", "altsum", "poisson", "factorization", "dirichlet", "2f1closed"}) {
    const IdentitySuite suite = run_identity(name);
    for (const auto& c : suite.checks) o.worst = std::max(o.worst, c.max_deviation / c.tolerance);
    if (!suite.passed()) failed += std::string(" ") + name;
  }
  o.passed = failed.empty();
  o.detail = failed.empty() ? "6 suites, max dev/tol shown" : "failed:" + failed;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "finite-sum identity", finite_sum_identity},
      {2, "boundary specialization", boundary_specialization},
      {3, "series vs series", series_vs_series},
      {4, "series vs simplex integral", series_vs_simplex},
      {5, "boundary and Laplace chain", laplace_chain},
      {6, "disk Bessel identity", disk_identity},
      {7, "normalization and symmetry", normalization_symmetry},
      {8, "support bound and total mass", support_and_mass},
      {9, "auxiliary identities", auxiliary_identities},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %s: max %.3e (%s) %.1fs\n", o.passed ? "PASS" : "FAIL", c.id, c.title,
                o.worst, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
