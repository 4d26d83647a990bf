#include "dihedral/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dihedral/compensated_sum.hpp"

namespace dihedral {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kSeriesTermCap = 200000;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::floor(x) == x;
}

}  // namespace

double pochhammer(double x, unsigned m) {
  double result = 1.0;
  for (unsigned i = 0; i < m; ++i) result *= x + i;
  return result;
}

double log_pochhammer(double x, double m) {
  return std::lgamma(x + m) - std::lgamma(x);
}

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

double gegenbauer(unsigned j, double k, double z) {
  if (!(k > 0.0)) {
    throw std::invalid_argument("gegenbauer: parameter k must be positive");
  }
  if (!(std::abs(z) <= 1.0 + 1e-12)) {
    throw std::invalid_argument("gegenbauer: argument outside [-1, 1]");
  }
  if (j == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * k * z;
  for (unsigned i = 2; i <= j; ++i) {
    const double next =
        (2.0 * z * (i + k - 1.0) * cur - (i + 2.0 * k - 2.0) * prev) / i;
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer_at_one(unsigned j, double k) {
  double result = 1.0;
  for (unsigned i = 0; i < j; ++i) result *= (2.0 * k + i) / (i + 1.0);
  return result;
}

double chebyshev_t(unsigned n, double z) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = z;
  for (unsigned i = 1; i < n; ++i) {
    const double next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> chebyshev_t_coefficients(unsigned n) {
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (unsigned i = 1; i < n; ++i) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t d = 0; d < cur.size(); ++d) next[d + 1] += 2.0 * cur[d];
    for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= prev[d];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

SeriesValue bessel_i_norm(double nu, double v) {
  if (!(nu > -1.0)) {
    throw std::invalid_argument("bessel_i_norm: order must exceed -1");
  }
  const double x = 0.25 * v * v;
  CompensatedSum<double> sum(1.0);
  double term = 1.0;
  for (std::size_t m = 0; m < kSeriesTermCap; ++m) {
    // Ratios t_{m+1}/t_m decrease in m, so once below one the geometric
    // series built on the current ratio bounds the remaining tail.
    const double q = x / ((m + 1.0) * (nu + m + 1.0));
    if (q < 1.0) {
      const double tail = term * q / (1.0 - q);
      if (tail <= kEps * sum.value() * 0.25) {
        return {sum.value(), tail, m + 1};
      }
    }
    term *= q;
    sum += term;
  }
  throw ConvergenceError("bessel_i_norm: series did not converge");
}

SeriesValue bessel_i(double nu, double v) {
  if (!(nu >= 0.0) || !(v >= 0.0)) {
    throw std::invalid_argument("bessel_i: requires nu >= 0 and v >= 0");
  }
  if (v == 0.0) return {nu == 0.0 ? 1.0 : 0.0, 0.0, 1};
  SeriesValue s = bessel_i_norm(nu, v);
  const double scale = std::exp(nu * std::log(0.5 * v) - std::lgamma(nu + 1.0));
  s.value *= scale;
  s.tail_bound *= scale;
  return s;
}

namespace {

template <typename Real>
SeriesValue gauss_2f1_series(double a, double b, double c, double z) {
  CompensatedSum<Real> sum(1);
  Real term = 1;
  int quiet = 0;
  for (std::size_t m = 0; m < kSeriesTermCap; ++m) {
    const Real ratio = (Real(a) + m) * (Real(b) + m) / ((Real(c) + m) * (m + 1)) * Real(z);
    term *= ratio;
    sum += term;
    if (term == 0) return {static_cast<double>(sum.value()), 0.0, m + 2};
    const double mag = std::abs(static_cast<double>(term));
    const double total = std::abs(static_cast<double>(sum.value()));
    const double r = std::max(std::abs(static_cast<double>(ratio)), std::abs(z));
    if (r < 1.0 && mag <= kEps * 0.25 * total) {
      if (++quiet >= 5) {
        return {static_cast<double>(sum.value()), mag * r / (1.0 - r), m + 2};
      }
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge within term cap");
}

}  // namespace

SeriesValue gauss_2f1(double a, double b, double c, double z,
                      bool extended_precision) {
  if (is_nonpositive_integer(c)) {
    throw std::invalid_argument("gauss_2f1: c is a nonpositive integer");
  }
  if (!(std::abs(z) < 1.0)) {
    throw ConvergenceError("gauss_2f1: series diverges for |z| >= 1");
  }
  if (z == 0.0) return {1.0, 0.0, 1};
  return extended_precision ? gauss_2f1_series<long double>(a, b, c, z)
                            : gauss_2f1_series<double>(a, b, c, z);
}

SeriesValue gauss_2f1_real(double a, double b, double c, double z) {
  if (!(z < 1.0)) {
    throw ConvergenceError("gauss_2f1_real: requires z < 1");
  }
  if (z >= 0.0) return gauss_2f1(a, b, c, z);
  // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)).
  SeriesValue s = gauss_2f1(a, c - b, c, z / (z - 1.0));
  const double scale = std::pow(1.0 - z, -a);
  s.value *= scale;
  s.tail_bound *= scale;
  return s;
}

SeriesValue hyp_0f(std::span<const double> params, double z) {
  for (double p : params) {
    if (is_nonpositive_integer(p)) {
      throw std::invalid_argument("hyp_0f: parameter is a nonpositive integer");
    }
  }
  CompensatedSum<double> sum(1.0);
  if (z == 0.0) return {1.0, 0.0, 1};
  double term = 1.0;
  int quiet = 0;
  for (std::size_t j = 0; j < kSeriesTermCap; ++j) {
    double denom = j + 1.0;
    for (double p : params) denom *= p + j;
    const double ratio = z / denom;
    term *= ratio;
    sum += term;
    const double q = std::abs(ratio);
    if (q < 1.0 && std::abs(term) <= kEps * 0.25 * std::abs(sum.value())) {
      if (++quiet >= 5) {
        return {sum.value(), std::abs(term) * q / (1.0 - q), j + 2};
      }
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("hyp_0f: series did not converge");
}

void HornArgs::validate() const {
  if (betas.empty() || betas.size() != zs.size()) {
    throw std::invalid_argument(
        "horn_phi2: betas and zs must have equal, nonzero length");
  }
  if (is_nonpositive_integer(gamma)) {
    throw std::invalid_argument("horn_phi2: gamma is a nonpositive integer");
  }
}

namespace {

template <typename Real>
SeriesValue horn_phi2_impl(const HornArgs& args, const EvalConfig& cfg) {
  const std::size_t n = args.betas.size();
  const std::size_t cap = cfg.horn_degree_cap;
  double zmax = 0.0;
  for (double z : args.zs) zmax = std::max(zmax, std::abs(z));

  // uni[s][m]      = (beta_s)_m z_s^m / m!
  // prod[s][N]     = degree-N coefficient of uni[0] * ... * uni[s]
  // abs_* mirror them with |beta_s|, |z_s| and bound the signed sums.
  std::vector<std::vector<Real>> uni(n), prod(n), abs_uni(n), abs_prod(n);
  for (std::size_t s = 0; s < n; ++s) {
    uni[s].reserve(cap + 1);
    prod[s].reserve(cap + 1);
    abs_uni[s].reserve(cap + 1);
    abs_prod[s].reserve(cap + 1);
  }

  CompensatedSum<Real> sum;
  Real inv_gamma_poch = 1;  // 1 / (gamma)_N
  double prev_abs = 0.0;
  int quiet = 0;
  for (std::size_t N = 0; N <= cap; ++N) {
    for (std::size_t s = 0; s < n; ++s) {
      if (N == 0) {
        uni[s].push_back(1);
        abs_uni[s].push_back(1);
      } else {
        const Real step = (Real(args.betas[s]) + (N - 1)) / Real(N);
        uni[s].push_back(uni[s][N - 1] * step * Real(args.zs[s]));
        abs_uni[s].push_back(abs_uni[s][N - 1] * std::abs(step) *
                             std::abs(Real(args.zs[s])));
      }
    }
    prod[0].push_back(uni[0][N]);
    abs_prod[0].push_back(abs_uni[0][N]);
    for (std::size_t s = 1; s < n; ++s) {
      CompensatedSum<Real> c;
      Real ac = 0;
      for (std::size_t i = 0; i <= N; ++i) {
        c += prod[s - 1][i] * uni[s][N - i];
        ac += abs_prod[s - 1][i] * abs_uni[s][N - i];
      }
      prod[s].push_back(c.value());
      abs_prod[s].push_back(ac);
    }
    if (N > 0) inv_gamma_poch /= Real(args.gamma) + (N - 1);

    const Real contrib = prod[n - 1][N] * inv_gamma_poch;
    const double abs_contrib =
        static_cast<double>(abs_prod[n - 1][N] * std::abs(inv_gamma_poch));
    sum += contrib;

    const double total = std::abs(static_cast<double>(sum.value()));
    const bool past_peak = static_cast<double>(N) > zmax * n;
    if (past_peak && abs_contrib <= cfg.rel_tol * total + cfg.abs_tol) {
      if (++quiet >= cfg.window) {
        const double q = prev_abs > 0.0 ? abs_contrib / prev_abs : 0.0;
        const double tail = q < 1.0 ? abs_contrib * q / (1.0 - q) : abs_contrib;
        return {static_cast<double>(sum.value()), tail, N + 1};
      }
    } else {
      quiet = 0;
    }
    prev_abs = abs_contrib;
  }
  throw ConvergenceError("horn_phi2: degree cap " + std::to_string(cap) +
                         " reached before tolerance was met");
}

}  // namespace

SeriesValue horn_phi2(const HornArgs& args, const EvalConfig& cfg) {
  args.validate();
  return cfg.extended_precision ? horn_phi2_impl<long double>(args, cfg)
                                : horn_phi2_impl<double>(args, cfg);
}

}  // namespace dihedral
