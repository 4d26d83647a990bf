#include "dihedral/dihedral_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dihedral/compensated_sum.hpp"
#include "dihedral/special.hpp"

namespace dihedral {

namespace {

constexpr double kPi = std::numbers::pi;

void require_n_at_least_3(const DihedralParams& params, const char* what) {
  if (params.n() < 3) {
    throw std::invalid_argument(std::string(what) + ": requires n >= 3");
  }
}

// Prefactor c_{n,k} / (n B(k+1/2,1/2) Gamma(nk)); equal to one up to rounding
// and kept explicit so the normalization is visible at the call site.
double series_prefactor(const DihedralParams& p) {
  return std::exp(log_normalization_constant(p.n(), p.k()) - std::log(p.n()) -
                  log_beta(p.k() + 0.5, 0.5) - std::lgamma(p.gamma_exp()));
}

}  // namespace

DihedralParams::DihedralParams(int n, double k) : n_(n), k_(k) {
  if (n < 2) throw std::invalid_argument("dihedral group order parameter n must be >= 2");
  if (!(k > 0.0)) throw std::invalid_argument("multiplicity k must be positive");
}

PolarPoint PolarPoint::from_cartesian(double x1, double x2) {
  return {std::hypot(x1, x2), std::atan2(x2, x1)};
}

double PolarPoint::x1() const { return radius * std::cos(angle); }
double PolarPoint::x2() const { return radius * std::sin(angle); }

BCoeffs make_bcoeffs(double theta, int n) {
  BCoeffs b{theta, n, {}};
  b.values.reserve(n);
  for (int s = 1; s <= n; ++s) b.values.push_back(std::cos(theta + 2.0 * kPi * s / n));
  return b;
}

PolarPoint wedge_reduce(PolarPoint point, int n) {
  if (!(point.radius >= 0.0)) {
    throw std::invalid_argument("wedge_reduce: radius must be nonnegative");
  }
  const double period = 2.0 * kPi / n;
  double a = std::fmod(point.angle, period);
  if (a < 0.0) a += period;
  if (a > 0.5 * period) a = period - a;
  // fmod can return values a hair below `period` for exact multiples.
  if (a < 0.0 || period - a < 1e-15) a = 0.0;
  return {point.radius, a};
}

double log_normalization_constant(int n, double k) {
  return std::log(static_cast<double>(n)) + log_beta(k + 0.5, 0.5) + std::lgamma(n * k);
}

double s_n_direct(const DihedralParams& params, double phi, double theta,
                  unsigned N) {
  require_n_at_least_3(params, "s_n_direct");
  const int n = params.n();
  const double k = params.k();
  const double cphi = std::cos(n * phi);
  const double ctheta = std::cos(n * theta);
  CompensatedSum<double> sum;
  for (unsigned j = 0; n * j <= N; ++j) {
    const unsigned rest = N - n * j;
    if (rest % 2 != 0) continue;
    const unsigned m = rest / 2;
    const double log_mag = -std::lgamma(m + 1.0) - std::lgamma(n * (j + k) + m + 1.0);
    const double ratio = gegenbauer(j, k, cphi) * gegenbauer(j, k, ctheta) /
                         gegenbauer_at_one(j, k);
    sum += n * (j + k) * std::exp(log_mag) * ratio;
  }
  return sum.value();
}

double s_n_closed(const DihedralParams& params, double phi, double theta,
                  unsigned N, std::size_t composition_cap) {
  require_n_at_least_3(params, "s_n_closed");
  const int n = params.n();
  const double k = params.k();

  // Number of compositions C(N+n-1, n-1), checked before any work.
  double count = 1.0;
  for (int i = 1; i < n; ++i) count = count * (N + i) / i;
  if (count > static_cast<double>(composition_cap)) {
    throw CapacityError("s_n_closed: " + std::to_string(static_cast<long long>(count)) +
                        " compositions exceed the cap of " +
                        std::to_string(composition_cap));
  }

  const std::vector<double> b = make_bcoeffs(theta - phi, n).values;
  const double cross = -std::pow(2.0, 2 - n) * std::sin(n * theta) * std::sin(n * phi);

  // outer[j] = (k)_j^2 / ((2k)_j j!) cross^j
  std::vector<double> outer(N + 1);
  outer[0] = 1.0;
  for (unsigned j = 1; j <= N; ++j) {
    outer[j] = outer[j - 1] * (k + j - 1) * (k + j - 1) / ((2 * k + j - 1) * j) * cross;
  }
  // rising[j][d] = (k+j)_d / d!
  std::vector<std::vector<double>> rising(N + 1, std::vector<double>(N + 1));
  for (unsigned j = 0; j <= N; ++j) {
    rising[j][0] = 1.0;
    for (unsigned d = 1; d + j <= N; ++d) {
      rising[j][d] = rising[j][d - 1] * (k + j + d - 1) / d;
    }
  }

  // pw[s][d] = b_s^d
  std::vector<std::vector<double>> pw(n, std::vector<double>(N + 1, 1.0));
  for (int s = 0; s < n; ++s) {
    for (unsigned d = 1; d <= N; ++d) pw[s][d] = pw[s][d - 1] * b[s];
  }

  std::vector<unsigned> m(n, 0);
  CompensatedSum<double> total;
  auto visit = [&] {
    const unsigned jmax = *std::min_element(m.begin(), m.end());
    for (unsigned j = 0; j <= jmax; ++j) {
      double term = outer[j];
      for (int s = 0; s < n; ++s) {
        const unsigned d = m[s] - j;
        term *= rising[j][d] * pw[s][d];
      }
      total += term;
    }
  };
  // Compositions of N into n nonnegative parts, slot by slot.
  auto recurse = [&](auto&& self, int slot, unsigned left) -> void {
    if (slot == n - 1) {
      m[slot] = left;
      visit();
      return;
    }
    for (unsigned part = 0; part <= left; ++part) {
      m[slot] = part;
      self(self, slot + 1, left - part);
    }
  };
  recurse(recurse, 0, N);
  return std::exp(N * std::log(2.0) - std::lgamma(n * k + N)) * total.value();
}

double s_n_boundary(const DihedralParams& params, double theta, unsigned N) {
  require_n_at_least_3(params, "s_n_boundary");
  const int n = params.n();
  const double k = params.k();
  const std::vector<double> b = make_bcoeffs(theta, n).values;
  // Degree-N coefficient of prod_s (1 - b_s t)^{-k}, built by multiplying in
  // one factor at a time.
  std::vector<double> coeff(N + 1, 0.0);
  coeff[0] = 1.0;
  for (int s = 0; s < n; ++s) {
    std::vector<double> factor(N + 1);
    factor[0] = 1.0;
    for (unsigned d = 1; d <= N; ++d) factor[d] = factor[d - 1] * (k + d - 1) / d * b[s];
    std::vector<double> next(N + 1, 0.0);
    for (unsigned i = 0; i <= N; ++i) {
      CompensatedSum<double> c;
      for (unsigned d = 0; d <= i; ++d) c += coeff[i - d] * factor[d];
      next[i] = c.value();
    }
    coeff = std::move(next);
  }
  return std::exp(N * std::log(2.0) - std::lgamma(n * k + N)) * coeff[N];
}

EvalResult eval_gegenbauer_series(const DihedralParams& params, PolarPoint x,
                                  PolarPoint y, const EvalConfig& cfg) {
  if (!(x.radius >= 0.0) || !(y.radius >= 0.0)) {
    throw std::invalid_argument("eval_gegenbauer_series: radii must be nonnegative");
  }
  const int n = params.n();
  const double k = params.k();
  if (cfg.reduce_angles) {
    x = wedge_reduce(x, n);
    y = wedge_reduce(y, n);
  }
  const double v = x.radius * y.radius;
  const double prefactor = series_prefactor(params);
  if (v == 0.0) return {prefactor, 0.0, 1, 0};

  // term_j = c/(nB) Gamma(nk) n(j+k) / Gamma(nj+nk+1) (v/2)^{nj}
  //          C_j(cos n phi) C_j(cos n theta) / C_j(1) i_{nj+nk}(v)
  const double cx = std::cos(n * x.angle);
  const double cy = std::cos(n * y.angle);
  const double log_half_v = std::log(0.5 * v);
  CompensatedSum<double> sum;
  // Gegenbauer recurrences for both arguments, advanced alongside j.
  double gx_prev = 0.0, gx = 1.0, gy_prev = 0.0, gy = 1.0, g_one = 1.0;
  int quiet = 0;
  double last_bound = 0.0;
  for (std::size_t j = 0; j < cfg.max_terms; ++j) {
    if (j == 1) {
      gx_prev = 1.0; gx = 2.0 * k * cx;
      gy_prev = 1.0; gy = 2.0 * k * cy;
    } else if (j >= 2) {
      const double a = 2.0 * (j + k - 1.0);
      const double c = j + 2.0 * k - 2.0;
      const double nx = (a * cx * gx - c * gx_prev) / j;
      const double ny = (a * cy * gy - c * gy_prev) / j;
      gx_prev = gx; gx = nx;
      gy_prev = gy; gy = ny;
    }
    if (j >= 1) g_one *= (2.0 * k + j - 1.0) / j;

    const double nu = n * (j + k);
    const double log_coef = std::log(n * (j + k)) + std::lgamma(n * k) - std::lgamma(nu + 1.0) +
                            n * static_cast<double>(j) * log_half_v;
    const SeriesValue inner = bessel_i_norm(nu, v);
    const double coef = prefactor * std::exp(log_coef);
    const double term = coef * (gx * gy / g_one) * inner.value;
    sum += term;

    // |C_j(z)| <= C_j(1) bounds every later contribution of this index.
    const double bound = coef * g_one * (inner.value + inner.tail_bound);
    last_bound = bound;
    const double target = cfg.rel_tol * std::abs(sum.value()) + cfg.abs_tol;
    const bool decreasing = nu + 1.0 > v;
    if (decreasing && bound <= target) {
      if (++quiet >= cfg.window) {
        return {sum.value(), last_bound, j + 1, 0};
      }
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("eval_gegenbauer_series: term cap reached");
}

EvalResult eval_horn_series(const DihedralParams& params, PolarPoint x,
                            PolarPoint y, const EvalConfig& cfg) {
  if (!(x.radius >= 0.0) || !(y.radius >= 0.0)) {
    throw std::invalid_argument("eval_horn_series: radii must be nonnegative");
  }
  const int n = params.n();
  const double k = params.k();
  if (cfg.reduce_angles) {
    x = wedge_reduce(x, n);
    y = wedge_reduce(y, n);
  }
  const double v = x.radius * y.radius;
  const double prefactor = series_prefactor(params);
  if (v == 0.0) return {prefactor, 0.0, 1, 0};

  const std::vector<double> b = make_bcoeffs(y.angle - x.angle, n).values;
  const double cross =
      -4.0 * std::pow(0.5 * v, n) * std::sin(n * y.angle) * std::sin(n * x.angle);

  HornArgs horn;
  horn.zs.reserve(n);
  for (double bs : b) horn.zs.push_back(v * bs);

  CompensatedSum<double> sum;
  double coef = 1.0;  // (k)_j^2 / ((2k)_j (nk)_{nj} j!) cross^j
  double error = 0.0;
  std::size_t terms = 0;
  int quiet = 0;
  for (std::size_t j = 0; j < cfg.max_terms; ++j) {
    if (j > 0) {
      const double jm = j - 1.0;
      double step = (k + jm) * (k + jm) / ((2.0 * k + jm) * j) * cross;
      // (nk)_{nj} / (nk)_{n(j-1)} = prod_{i<n} (nk + n(j-1) + i)
      for (int i = 0; i < n; ++i) step /= n * k + n * jm + i;
      coef *= step;
    }
    double term = 0.0;
    if (coef != 0.0) {
      horn.betas.assign(n, k + j);
      horn.gamma = n * (k + j);
      const SeriesValue phi2 = horn_phi2(horn, cfg);
      term = prefactor * coef * phi2.value;
      error += prefactor * std::abs(coef) * phi2.tail_bound;
      terms += phi2.terms_used;
      sum += term;
    }
    const double target = cfg.rel_tol * std::abs(sum.value()) + cfg.abs_tol;
    if (std::abs(term) <= target) {
      if (++quiet >= cfg.window || coef == 0.0) {
        return {sum.value(), error + std::abs(term), terms, 0};
      }
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("eval_horn_series: outer term cap reached");
}

EvalResult boundary_horn(const DihedralParams& params, double rho, double r,
                         double theta, const EvalConfig& cfg) {
  require_n_at_least_3(params, "boundary_horn");
  if (!(rho >= 0.0) || !(r >= 0.0)) {
    throw std::invalid_argument("boundary_horn: radii must be nonnegative");
  }
  const int n = params.n();
  const double k = params.k();
  const double v = rho * r;
  HornArgs horn;
  horn.betas.assign(n, k);
  horn.gamma = n * k;
  // Arguments rho r cos(theta + 2 pi s / n), s = 0..n-1.
  for (int s = 0; s < n; ++s) horn.zs.push_back(v * std::cos(theta + 2.0 * kPi * s / n));
  const SeriesValue phi2 = horn_phi2(horn, cfg);
  const double prefactor = series_prefactor(params);
  return {prefactor * phi2.value, prefactor * phi2.tail_bound, phi2.terms_used, 0};
}

void verify_normalization(const DihedralParams& params) {
  for (double angle : {0.0, 0.3, 1.1}) {
    const PolarPoint origin{0.0, 0.0};
    const PolarPoint y{1.7, angle};
    const double g = eval_gegenbauer_series(params, origin, y).value;
    const double h = eval_horn_series(params, origin, y).value;
    if (std::abs(g - 1.0) > 1e-12 || std::abs(h - 1.0) > 1e-12) {
      throw std::logic_error("normalization self-check failed: D(0, y) != 1");
    }
  }
}

}  // namespace dihedral
