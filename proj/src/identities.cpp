#include "dihedral/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dihedral/dihedral_series.hpp"
#include "dihedral/laplace.hpp"
#include "dihedral/random.hpp"
#include "dihedral/simplex_integral.hpp"
#include "dihedral/special.hpp"

namespace dihedral {

namespace {

constexpr double kPi = std::numbers::pi;

// Streams 0..2^32 are reserved for Monte Carlo samples; identity suites draw
// their angles from streams above that range.
constexpr std::uint64_t kAngleStreamBase = std::uint64_t{1} << 40;

class Tracker {
 public:
  Tracker(std::string label, double tolerance) {
    check_.label = std::move(label);
    check_.tolerance = tolerance;
  }
  void add(double deviation) {
    ++check_.cases;
    if (!(deviation <= check_.max_deviation)) {
      // NaN deviations poison the maximum so they are never silently passed.
      check_.max_deviation = std::isnan(deviation) ? INFINITY : deviation;
    }
  }
  IdentityCheck finish() {
    check_.passed = check_.cases > 0 && check_.max_deviation <= check_.tolerance;
    return check_;
  }

 private:
  IdentityCheck check_;
};

double rel_dev(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }
double rel_dev_strict(double a, double b) { return std::abs(a - b) / std::abs(b); }

const double kSuiteKs[] = {0.3, 0.7, 1.0, 1.5, 2.5};

IdentitySuite suite_sn(std::uint64_t seed) {
  Tracker t("s_n_direct vs s_n_closed, n=3..6, N<=10", 1e-10);
  for (int n = 3; n <= 6; ++n) {
    for (double k : kSuiteKs) {
      const DihedralParams params(n, k);
      CounterRng rng(seed, kAngleStreamBase + n);
      for (int pair = 0; pair < 20; ++pair) {
        const double phi = rng.uniform() * kPi / n;
        const double theta = rng.uniform() * kPi / n;
        for (unsigned N = 0; N <= 10; ++N) {
          t.add(rel_dev(s_n_closed(params, phi, theta, N), s_n_direct(params, phi, theta, N)));
        }
      }
    }
  }
  return {"sN", {t.finish()}};
}

IdentitySuite suite_idgeg(std::uint64_t seed) {
  Tracker t("s_n_closed(phi=0) vs boundary generating function", 1e-12);
  Tracker d("s_n_direct(phi=0) vs boundary generating function", 1e-10);
  for (int n = 3; n <= 6; ++n) {
    for (double k : kSuiteKs) {
      const DihedralParams params(n, k);
      CounterRng rng(seed, kAngleStreamBase + 100 + n);
      for (int i = 0; i < 20; ++i) {
        const double theta = rng.uniform() * kPi / n;
        for (unsigned N = 0; N <= 10; ++N) {
          const double boundary = s_n_boundary(params, theta, N);
          t.add(rel_dev(s_n_closed(params, 0.0, theta, N), boundary));
          d.add(rel_dev(s_n_direct(params, 0.0, theta, N), boundary));
        }
      }
    }
  }
  return {"idgeg", {t.finish(), d.finish()}};
}

// Partial sums of sum_j C_j(cos a) C_j(cos b) / C_j(1) t^j, stopped by the
// geometric tail bound on C_j(1) |t|^j.
double poisson_series(double k, double a, double b, double t) {
  const double ca = std::cos(a);
  const double cb = std::cos(b);
  double sum = 0.0;
  double ga_prev = 0.0, ga = 1.0, gb_prev = 0.0, gb = 1.0, g1 = 1.0, tj = 1.0;
  for (unsigned j = 0; j < 5000; ++j) {
    if (j == 1) {
      ga_prev = 1.0; ga = 2.0 * k * ca;
      gb_prev = 1.0; gb = 2.0 * k * cb;
    } else if (j >= 2) {
      const double p = 2.0 * (j + k - 1.0);
      const double q = j + 2.0 * k - 2.0;
      const double na = (p * ca * ga - q * ga_prev) / j;
      const double nb = (p * cb * gb - q * gb_prev) / j;
      ga_prev = ga; ga = na;
      gb_prev = gb; gb = nb;
    }
    if (j >= 1) {
      g1 *= (2.0 * k + j - 1.0) / j;
      tj *= t;
    }
    sum += ga * gb / g1 * tj;
    const double ratio = std::max((2.0 * k + j) / (j + 1.0), 1.0) * std::abs(t);
    const double tail = g1 * std::abs(tj) * ratio / (1.0 - ratio);
    if (ratio < 1.0 && tail < 1e-15 * std::abs(sum)) return sum;
  }
  throw ConvergenceError("poisson kernel series did not converge");
}

double poisson_closed(double k, double a, double b, double t) {
  const double den = 1.0 - 2.0 * t * std::cos(a - b) + t * t;
  const double arg = -4.0 * t * std::sin(a) * std::sin(b) / den;
  return std::pow(den, -k) * gauss_2f1_real(k, k, 2.0 * k, arg).value;
}

// Right-hand side of the generating function of Gamma(nk+N) S_N / 2^N, with
// the cosine exponent inside the 2F1 argument dropped.
double generating_closed(int n, double k, double phi, double theta, double z) {
  const double s = std::sqrt(1.0 - z * z);
  const double zn = std::pow(z, n);
  const double den = std::pow(1.0 + s, n) + std::pow(1.0 - s, n) -
                     2.0 * zn * std::cos(n * (theta - phi));
  const double arg = -4.0 * zn * std::sin(n * theta) * std::sin(n * phi) / den;
  return std::pow(2.0, n * k) * std::pow(den, -k) *
         gauss_2f1_real(k, k, 2.0 * k, arg).value;
}

double generating_series(const DihedralParams& params, double phi, double theta, double z) {
  const double nk = params.gamma_exp();
  double sum = 0.0;
  int quiet = 0;
  for (unsigned N = 0; N < 400; ++N) {
    const double sn = s_n_direct(params, phi, theta, N);
    const double term =
        sn == 0.0 ? 0.0
                  : sn * std::exp(std::lgamma(nk + N) + N * std::log(0.5 * std::abs(z))) *
                        ((z < 0.0 && N % 2 == 1) ? -1.0 : 1.0);
    sum += term;
    quiet = std::abs(term) <= 1e-17 * std::abs(sum) ? quiet + 1 : 0;
    if (quiet >= 5 && N > 10) return sum;
  }
  throw ConvergenceError("S_N generating series did not converge");
}

IdentitySuite suite_poisson(std::uint64_t seed) {
  Tracker kernel("Gegenbauer Poisson kernel, |t|<=0.6", 1e-8);
  CounterRng rng(seed, kAngleStreamBase + 200);
  for (double k : {0.3, 1.0, 2.5}) {
    for (double t : {-0.6, -0.3, 0.1, 0.3, 0.6}) {
      for (int i = 0; i < 10; ++i) {
        const double a = rng.uniform() * kPi;
        const double b = rng.uniform() * kPi;
        kernel.add(rel_dev_strict(poisson_series(k, a, b, t), poisson_closed(k, a, b, t)));
      }
    }
  }
  Tracker gen("sum_N Gamma(nk+N) S_N (z/2)^N vs closed form", 1e-10);
  for (int n = 3; n <= 5; ++n) {
    for (double k : {0.5, 1.5}) {
      const DihedralParams params(n, k);
      for (double z : {-0.35, 0.2, 0.4}) {
        for (int i = 0; i < 4; ++i) {
          const double phi = rng.uniform() * kPi / n;
          const double theta = rng.uniform() * kPi / n;
          gen.add(rel_dev_strict(generating_series(params, phi, theta, z),
                                 generating_closed(n, k, phi, theta, z)));
        }
      }
    }
  }
  return {"poisson", {kernel.finish(), gen.finish()}};
}

IdentitySuite suite_factorization(std::uint64_t seed) {
  Tracker t("2 z^n T_n(1/z) - 2 z^n cos xi vs 2^n prod (1 - b_s z)", 1e-12);
  CounterRng rng(seed, kAngleStreamBase + 300);
  for (unsigned n = 3; n <= 8; ++n) {
    const std::vector<double> cheb = chebyshev_t_coefficients(n);
    for (int i = 0; i < 10; ++i) {
      const double xi = rng.uniform() * kPi;
      std::vector<double> lhs(n + 1, 0.0);
      for (unsigned d = 0; d <= n; ++d) lhs[n - d] += 2.0 * cheb[d];
      lhs[n] -= 2.0 * std::cos(xi);
      std::vector<double> rhs{std::pow(2.0, n)};
      for (unsigned s = 1; s <= n; ++s) {
        const double c = std::cos(xi / n + 2.0 * kPi * s / n);
        std::vector<double> next(rhs.size() + 1, 0.0);
        for (std::size_t d = 0; d < rhs.size(); ++d) {
          next[d] += rhs[d];
          next[d + 1] -= c * rhs[d];
        }
        rhs = std::move(next);
      }
      double scale = 1.0;
      for (double c : lhs) scale = std::max(scale, std::abs(c));
      double dev = 0.0;
      for (unsigned d = 0; d <= n; ++d) dev = std::max(dev, std::abs(lhs[d] - rhs[d]) / scale);
      t.add(dev);
    }
  }
  return {"factorization", {t.finish()}};
}

IdentitySuite suite_dirichlet(std::uint64_t seed) {
  Tracker det("product rule, beta >= 1", 1e-8);
  const std::vector<std::vector<double>> smooth{
      {1.0, 1.0, 1.0}, {2.0, 1.0, 1.0}, {1.5, 2.5, 3.0}, {1.2, 1.7, 2.2, 3.1}, {4.0, 2.0}};
  for (const auto& betas : smooth) {
    det.add(std::abs(dirichlet_moment_check(betas, QuadratureScheme::product(12)).value - 1.0));
  }
  Tracker mc("Monte Carlo, beta < 1", 1e-3);
  const std::vector<std::vector<double>> singular{{0.5, 0.5, 0.5}, {0.7, 0.3, 0.9}, {0.4, 0.6}};
  for (const auto& betas : singular) {
    const EvalResult r =
        dirichlet_moment_check(betas, QuadratureScheme::monte_carlo(1'000'000, seed));
    mc.add(std::abs(r.value - 1.0));
  }
  return {"dirichlet", {det.finish(), mc.finish()}};
}

IdentitySuite suite_altsum() {
  Tracker t("sum (-1)^j (k)_j (k)_{2m-j} / (j! (2m-j)!) = (k)_m / m!", 1e-12);
  for (double k : {0.3, 1.0, 2.5}) {
    for (unsigned m = 0; m <= 15; ++m) {
      std::vector<double> c(2 * m + 1);
      c[0] = 1.0;
      for (unsigned j = 1; j <= 2 * m; ++j) c[j] = c[j - 1] * (k + j - 1.0) / j;
      long double sum = 0.0L;
      for (unsigned j = 0; j <= 2 * m; ++j) {
        const long double term = static_cast<long double>(c[j]) * c[2 * m - j];
        sum += (j % 2 == 0) ? term : -term;
      }
      t.add(rel_dev_strict(static_cast<double>(sum), c[m]));
    }
  }
  return {"altsum", {t.finish()}};
}

IdentitySuite suite_duplication() {
  Tracker t("(x)_{2l} = 4^l (x/2)_l ((1+x)/2)_l", 1e-12);
  for (int i = 1; i <= 40; ++i) {
    const double x = 0.25 * i;
    for (unsigned l = 0; l <= 20; ++l) {
      const double rhs = std::pow(4.0, l) * pochhammer(0.5 * x, l) * pochhammer(0.5 * (1.0 + x), l);
      t.add(rel_dev_strict(pochhammer(x, 2 * l), rhs));
    }
  }
  return {"duplication", {t.finish()}};
}

IdentitySuite suite_2f1closed() {
  Tracker t("2F1(s/2, (s+1)/2; s+1; z) (1 + sqrt(1-z))^s = 2^s", 1e-10);
  for (int n = 3; n <= 6; ++n) {
    for (double k : kSuiteKs) {
      for (int j = 0; j <= 1; ++j) {
        const double s = n * k + n * j;
        for (int i = -9; i <= 9; ++i) {
          const double z = 0.1 * i;
          const double f = gauss_2f1(0.5 * s, 0.5 * (s + 1.0), s + 1.0, z, true).value;
          const double lhs = f * std::pow(1.0 + std::sqrt(1.0 - z), s);
          t.add(rel_dev_strict(lhs, std::pow(2.0, s)));
        }
      }
    }
  }
  return {"2f1closed", {t.finish()}};
}

IdentitySuite suite_diskbessel() {
  Tracker ts("disk integral, tanh-sinh radial rule", 1e-6);
  Tracker gj("disk integral, Gauss-Jacobi radial rule", 1e-6);
  for (double pk : {0.8, 1.0, 1.5, 2.5}) {
    for (double r : {0.0, 0.5, 1.0, 2.0, 4.0}) {
      for (double a : {0.0, 0.7, 2.0}) {
        const Point2 w{r * std::cos(a), r * std::sin(a)};
        ts.add(disk_bessel_identity(pk, w, QuadratureScheme::double_exponential(1e-10)).deviation);
        gj.add(disk_bessel_identity(pk, w, QuadratureScheme::product(40)).deviation);
      }
    }
  }
  return {"diskbessel", {ts.finish(), gj.finish()}};
}

}  // namespace

bool IdentitySuite::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

double IdentitySuite::max_deviation() const {
  double out = 0.0;
  for (const auto& c : checks) out = std::max(out, c.max_deviation);
  return out;
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"sN",       "idgeg",       "poisson",
                                              "factorization", "dirichlet", "altsum",
                                              "duplication", "2f1closed", "diskbessel"};
  return names;
}

IdentitySuite run_identity(std::string_view which, std::uint64_t seed) {
  if (which == "sN") return suite_sn(seed);
  if (which == "idgeg") return suite_idgeg(seed);
  if (which == "poisson") return suite_poisson(seed);
  if (which == "factorization") return suite_factorization(seed);
  if (which == "dirichlet") return suite_dirichlet(seed);
  if (which == "altsum") return suite_altsum();
  if (which == "duplication") return suite_duplication();
  if (which == "2f1closed") return suite_2f1closed();
  if (which == "diskbessel") return suite_diskbessel();
  throw std::invalid_argument("unknown identity suite '" + std::string(which) + "'");
}

}  // namespace dihedral
