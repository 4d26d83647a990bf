#include "dihedral/laplace.hpp"

#include <algorithm>
#include <array>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <exception>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "dihedral/compensated_sum.hpp"
#include "dihedral/quadrature.hpp"
#include "dihedral/random.hpp"
#include "dihedral/simplex_integral.hpp"
#include "dihedral/special.hpp"

namespace dihedral {

namespace {

constexpr double kPi = std::numbers::pi;

void require_density_domain(const EvenDihedralParams& params, const char* what) {
  if (params.p() < 2) {
    throw std::invalid_argument(std::string(what) + ": requires p >= 2 (the ellipse degenerates at p = 1)");
  }
  if (!(params.nu() > 0.0)) {
    throw std::invalid_argument(std::string(what) + ": requires pk > 1/2");
  }
}

// ---- polynomials of degree <= 3, lowest coefficient first -----------------

using Poly = std::array<double, 4>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; i + j < 4; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

double poly_eval(const Poly& c, double t) { return ((c[3] * t + c[2]) * t + c[1]) * t + c[0]; }

// Coefficients of c(e + d) in powers of d.
Poly taylor_shift(const Poly& c, double e) {
  return {poly_eval(c, e), c[1] + e * (2.0 * c[2] + 3.0 * e * c[3]), c[2] + 3.0 * e * c[3], c[3]};
}


// Real roots of c0 + c1 t + c2 t^2 inside (0, 1).
void quadratic_roots_in_unit(double c0, double c1, double c2, std::vector<double>& out) {
  const double scale = std::max({std::abs(c0), std::abs(c1), std::abs(c2)});
  if (scale == 0.0) return;
  auto keep = [&](double t) {
    if (t > 0.0 && t < 1.0) out.push_back(t);
  };
  if (std::abs(c2) <= 1e-14 * scale) {
    if (std::abs(c1) > 1e-14 * scale) keep(-c0 / c1);
    return;
  }
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc < 0.0) return;
  const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
  keep(q / c2);
  if (q != 0.0) keep(c0 / q);
}

// Size below which a value of the cubic is indistinguishable from zero.
double poly_noise(const Poly& c) {
  return 1e-13 * (std::abs(c[0]) + std::abs(c[1]) + std::abs(c[2]) + std::abs(c[3]));
}

int noisy_sign(double value, double noise) {
  if (value > noise) return 1;
  if (value < -noise) return -1;
  return 0;
}

// Roots of the cubic in (0, 1), found on monotone pieces between critical
// points. Values within rounding noise of zero count as zero, so that the
// structural roots at the simplex vertices do not spawn slivers.
std::vector<double> cubic_roots_in_unit(const Poly& c) {
  const double noise = poly_noise(c);
  std::vector<double> breaks{0.0, 1.0};
  quadratic_roots_in_unit(c[1], 2.0 * c[2], 3.0 * c[3], breaks);
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double l = breaks[i];
    const double r = breaks[i + 1];
    if (!(r > l)) continue;
    const double fl = poly_eval(c, l);
    const double fr = poly_eval(c, r);
    const int sl = noisy_sign(fl, noise);
    const int sr = noisy_sign(fr, noise);
    if (sl == 0 && l > 0.0) roots.push_back(l);
    if (sl * sr < 0) {
      std::uintmax_t iters = 200;
      const auto bracket = boost::math::tools::toms748_solve(
          [&](double t) { return poly_eval(c, t); }, l, r, fl, fr,
          boost::math::tools::eps_tolerance<double>(52), iters);
      roots.push_back(0.5 * (bracket.first + bracket.second));
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---- the density integrand -------------------------------------------------

struct DensityIntegrand {
  const EvenDihedralParams& params;
  double rho;
  Point2 z;
  double tol;

  static constexpr std::size_t kOuterRefinements = 9;
  static constexpr std::size_t kInnerRefinements = 11;

  double nu() const { return params.nu(); }

  // log of sqrt(R) (2/(rho^2 R))^nu (P/(1+X))^{nu-1}, or -inf outside the region.
  double log_kernel(double one_plus_x, double r, double pval) const {
    if (!(one_plus_x > 0.0) || !(r > 0.0) || !(pval > 0.0)) return -INFINITY;
    const double v = nu();
    return v * std::log(2.0 / (rho * rho)) + (0.5 - v) * std::log(r) +
           (v - 1.0) * (std::log(pval) - std::log(one_plus_x));
  }

  // Integral over the last collapsed coordinate t, with u_{p-1} = m t and
  // u_0 = m (1 - t); X and Y are affine in t, so the region boundary is cubic.
  double last(double mass, double xfix, double yfix) const {
    const int p = params.p();
    const double k = params.k();
    const double x0 = xfix + mass;
    const double x1 = mass * (params.A()[p - 2] - 1.0);
    const double y0 = yfix;
    const double y1 = mass * params.B()[p - 2];

    const Poly one_plus_x{1.0 + x0, x1, 0.0, 0.0};
    const Poly r_poly{1.0 - x0 * x0 - y0 * y0, -2.0 * (x0 * x1 + y0 * y1),
                      -(x1 * x1 + y1 * y1), 0.0};
    const Poly lead{0.5 * rho * rho * (1.0 + x0) - z.z1 * z.z1, 0.5 * rho * rho * x1, 0.0, 0.0};
    const Poly lin{(1.0 + x0) * z.z2 - y0 * z.z1, x1 * z.z2 - y1 * z.z1, 0.0, 0.0};
    Poly pcubic = poly_mul(lead, r_poly);
    const Poly sq = poly_mul(lin, lin);
    for (int i = 0; i < 4; ++i) pcubic[i] -= sq[i];

    const double noise = poly_noise(pcubic);
    const std::vector<double> roots = cubic_roots_in_unit(pcubic);
    std::vector<double> pts{0.0};
    pts.insert(pts.end(), roots.begin(), roots.end());
    pts.push_back(1.0);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    CompensatedSum<double> total;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double lo = pts[i];
      const double hi = pts[i + 1];
      if (!(hi > lo)) continue;
      if (noisy_sign(poly_eval(pcubic, 0.5 * (lo + hi)), noise) <= 0) continue;
      // Every factor is expanded about both ends of the piece so that the
      // exact endpoint distances carry zeros (roots of P, vertices of the
      // simplex where 1 + X or R vanish), including double roots.
      auto shifted = [](const Poly& c, double e) {
        Poly out = taylor_shift(c, e);
        const double eps = poly_noise(c);
        for (int j = 0; j < 2 && std::abs(out[j]) <= eps; ++j) out[j] = 0.0;
        return out;
      };
      const Poly p_lo = shifted(pcubic, lo), p_hi = shifted(pcubic, hi);
      const Poly opx_lo = shifted(one_plus_x, lo), opx_hi = shifted(one_plus_x, hi);
      const Poly r_lo = shifted(r_poly, lo), r_hi = shifted(r_poly, hi);
      auto f = [&](double t, double dl, double dr) {
        const double tc = hi == 1.0 ? dr : 1.0 - t;
        const double tt = lo == 0.0 ? dl : t;
        const bool near_lo = dl <= dr;
        const double d = near_lo ? dl : -dr;
        const double pval = poly_eval(near_lo ? p_lo : p_hi, d);
        const double opx = poly_eval(near_lo ? opx_lo : opx_hi, d);
        const double rv = poly_eval(near_lo ? r_lo : r_hi, d);
        const double lk = log_kernel(opx, rv, pval);
        if (lk == -INFINITY) return 0.0;
        return std::exp(lk + (k - 1.0) * (std::log(tt) + std::log(tc)));
      };
      total += tanh_sinh_integrate(f, lo, hi, tol, kInnerRefinements).value;
    }
    return total.value();
  }

  // Collapsed coordinate i (1-based) carries t^{k-1} (1-t)^{k(p-i)-1}.
  double level(int i, double mass, double xfix, double yfix) const {
    const int p = params.p();
    if (i == p - 1) return last(mass, xfix, yfix);
    const double k = params.k();
    const double rest = k * (p - i);
    auto f = [&](double t, double dl, double dr) {
      const double ui = mass * t;
      const double inner =
          level(i + 1, mass * dr, xfix + ui * params.A()[i - 1], yfix + ui * params.B()[i - 1]);
      if (inner == 0.0) return 0.0;
      return inner * std::exp((k - 1.0) * std::log(dl) + (rest - 1.0) * std::log(dr));
    };
    return tanh_sinh_integrate(f, 0.0, 1.0, tol, kOuterRefinements).value;
  }

  double value() const {
    const int p = params.p();
    const double k = params.k();
    const double log_norm = std::lgamma(p * k) - p * std::lgamma(k);
    return nu() / kPi * std::exp(log_norm) * level(1, 1.0, 0.0, 0.0);
  }
};

// Same kernel at a single simplex point, for the sampled schemes.
double density_point(const EvenDihedralParams& params, double rho, Point2 z,
                     std::span<const double> u) {
  const ABCCoeffs c = abc(params, u);
  if (c.ac < 1e-14) return 0.0;
  const double one_plus_x = 1.0 + c.x_sum;
  const double r = c.ac * c.ac;
  const double lin = one_plus_x * z.z2 - c.y_sum * z.z1;
  const double pval = one_plus_x * rho * rho * r / 2.0 - r * z.z1 * z.z1 - lin * lin;
  if (!(pval > 0.0) || !(one_plus_x > 0.0)) return 0.0;
  const double v = params.nu();
  return std::exp(v * std::log(2.0 / (rho * rho)) + (0.5 - v) * std::log(r) +
                  (v - 1.0) * (std::log(pval) - std::log(one_plus_x)));
}

// Disk integral with a precomputed Gauss-Jacobi radial rule.
class DiskRule {
 public:
  DiskRule(double nu_exp, std::size_t radial_order)
      : nu_(nu_exp - 0.5), rule_(gauss_jacobi01(radial_order, 0.0, nu_ - 1.0)) {}

  double integrate(Point2 w) const {
    CompensatedSum<double> sum;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      sum += rule_.weights[i] * angular_integral(w, rule_.nodes[i]);
    }
    return nu_ / kPi * 0.5 * sum.value();
  }

  // int_0^{2 pi} exp(sqrt(s) <w, (cos a, sin a)>) da by the trapezoid rule,
  // spectrally accurate for this periodic entire integrand.
  static double angular_integral(Point2 w, double s) {
    const std::size_t m = 32 + 2 * static_cast<std::size_t>(std::ceil(w.norm()));
    const double root = std::sqrt(s);
    CompensatedSum<double> sum;
    for (std::size_t i = 0; i < m; ++i) {
      const double a = 2.0 * kPi * i / m;
      sum += std::exp(root * (w.z1 * std::cos(a) + w.z2 * std::sin(a)));
    }
    return 2.0 * kPi / m * sum.value();
  }

 private:
  double nu_;
  GaussRule rule_;
};

constexpr std::size_t kLaplaceRadialOrder = 48;

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(configured_thread_count(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) fn(i);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

}  // namespace

EvenDihedralParams::EvenDihedralParams(int p, double k) : p_(p), k_(k) {
  if (p < 1) throw std::invalid_argument("half-order p must be >= 1");
  if (!(k > 0.0)) throw std::invalid_argument("multiplicity k must be positive");
  for (int s = 1; s < p; ++s) {
    a_.push_back(std::cos(2.0 * s * kPi / p));
    b_.push_back(-std::sin(2.0 * s * kPi / p));
  }
}

double Point2::norm() const { return std::hypot(z1, z2); }

ABCCoeffs abc(const EvenDihedralParams& params, std::span<const double> u) {
  const int p = params.p();
  if (u.size() != static_cast<std::size_t>(p)) {
    throw std::invalid_argument("abc: simplex point must have p coordinates");
  }
  ABCCoeffs out;
  out.x_sum = u[p - 1];
  for (int s = 0; s + 1 < p; ++s) {
    out.x_sum += u[s] * params.A()[s];
    out.y_sum += u[s] * params.B()[s];
  }
  double radicand = 1.0 - out.x_sum * out.x_sum - out.y_sum * out.y_sum;
  if (radicand < -1e-12) {
    throw std::domain_error("abc: negative radicand; input is not on the simplex");
  }
  radicand = std::max(radicand, 0.0);
  out.a = std::sqrt(std::max(1.0 + out.x_sum, 0.0));
  out.ab = out.y_sum;
  out.ac = std::sqrt(radicand);
  if (out.a > 0.0) {
    out.b = out.ab / out.a;
    out.c = out.ac / out.a;
  } else {
    out.degenerate = true;
    out.b = NAN;
    out.c = NAN;
  }
  return out;
}

EvalResult eval_boundary_bessel(const EvenDihedralParams& params, double rho,
                                PolarPoint y, const QuadratureScheme& scheme,
                                const EvalConfig& cfg) {
  if (!(rho >= 0.0) || !(y.radius >= 0.0)) {
    throw std::invalid_argument("eval_boundary_bessel: radii must be nonnegative");
  }
  scheme.validate();
  if (cfg.reduce_angles) y = wedge_reduce(y, 2 * params.p());
  const double nu = params.nu();
  if (params.p() == 1) {
    const SeriesValue v = bessel_i_norm(nu, rho * std::abs(y.x1()));
    return {v.value, v.tail_bound, v.terms_used, 0};
  }
  const double r2 = y.radius * y.radius;
  const double c2 = std::cos(2.0 * y.angle);
  const double s2 = std::sin(2.0 * y.angle);
  const std::vector<double> alphas(params.p(), params.k());
  return simplex_expectation(alphas, scheme, cfg, [&](std::span<const double> u) {
    const ABCCoeffs c = abc(params, u);
    const double q = std::max(0.0, r2 * (1.0 + c.x_sum * c2 + c.y_sum * s2));
    return bessel_i_norm(nu, rho / std::numbers::sqrt2 * std::sqrt(q)).value;
  });
}

double density_h(const EvenDihedralParams& params, double rho, Point2 z,
                 const QuadratureScheme& scheme) {
  require_density_domain(params, "density_h");
  if (!(rho > 0.0)) throw std::invalid_argument("density_h: rho must be positive");
  scheme.validate();
  if (scheme.kind == QuadratureKind::tanh_sinh) {
    return DensityIntegrand{params, rho, z, scheme.tolerance}.value();
  }
  if (params.p() * params.k() < 1.5) {
    throw std::invalid_argument(
        "density_h: the integrand is singular on the region boundary for pk < 3/2; "
        "use the tanh-sinh scheme");
  }
  const std::vector<double> alphas(params.p(), params.k());
  const EvalResult r = simplex_expectation(alphas, scheme, EvalConfig{}, [&](std::span<const double> u) {
    return density_point(params, rho, z, u);
  });
  return params.nu() / kPi * r.value;
}

EvalResult eval_laplace(const EvenDihedralParams& params, double rho, PolarPoint y,
                        const QuadratureScheme& scheme, const EvalConfig& cfg) {
  require_density_domain(params, "eval_laplace");
  if (!(rho >= 0.0) || !(y.radius >= 0.0)) {
    throw std::invalid_argument("eval_laplace: radii must be nonnegative");
  }
  scheme.validate();
  if (cfg.reduce_angles) y = wedge_reduce(y, 2 * params.p());
  const double y1 = y.x1();
  const double y2 = y.x2();
  const DiskRule disk(params.p() * params.k(), kLaplaceRadialOrder);
  const double scale = rho / std::numbers::sqrt2;
  const std::vector<double> alphas(params.p(), params.k());
  return simplex_expectation(alphas, scheme, cfg, [&](std::span<const double> u) {
    const ABCCoeffs c = abc(params, u);
    Point2 w;
    if (c.a > 1e-8) {
      // z = (rho/sqrt2)(a w1, b w1 + c w2) turns <y, z> into <w', w>.
      w = {scale * (c.a * y1 + c.b * y2), scale * c.c * y2};
    } else {
      // The ellipse collapses; only |w'| is defined and the disk integral
      // is rotation invariant.
      const double q = (1.0 + c.x_sum) * y1 * y1 + 2.0 * c.y_sum * y1 * y2 +
                       (1.0 - c.x_sum) * y2 * y2;
      w = {scale * std::sqrt(std::max(q, 0.0)), 0.0};
    }
    return disk.integrate(w);
  });
}

double disk_integral(double nu_exp, Point2 w, const QuadratureScheme& scheme) {
  if (!(nu_exp > 0.5)) throw std::invalid_argument("disk_integral: requires pk > 1/2");
  scheme.validate();
  const double nu = nu_exp - 0.5;
  switch (scheme.kind) {
    case QuadratureKind::product_rule:
      return DiskRule(nu_exp, scheme.order_or_samples).integrate(w);
    case QuadratureKind::tanh_sinh: {
      const auto r = tanh_sinh_integrate(
          [&](double s, double, double dr) {
            return std::exp((nu - 1.0) * std::log(dr)) * DiskRule::angular_integral(w, s);
          },
          0.0, 1.0, scheme.tolerance);
      return nu / kPi * 0.5 * r.value;
    }
    case QuadratureKind::dirichlet_monte_carlo:
      break;
  }
  throw std::invalid_argument("disk_integral: scheme must be product or tanh-sinh");
}

DiskIdentityResult disk_bessel_identity(double nu_exp, Point2 w,
                                        const QuadratureScheme& scheme) {
  DiskIdentityResult out;
  out.integral = disk_integral(nu_exp, w, scheme);
  out.series = bessel_i_norm(nu_exp - 0.5, w.norm()).value;
  out.deviation = std::abs(out.integral - out.series) / std::abs(out.series);
  return out;
}

bool in_orbit_hull(int p, double rho, Point2 z, double slack) {
  // Fold z into the wedge [0, pi/(2p)] of the 2p-gon, then test the edge
  // joining the vertices at angles 0 and pi/p.
  const double r = z.norm();
  const double half = kPi / (2.0 * p);
  double a = std::fmod(std::atan2(z.z2, z.z1), 2.0 * half);
  if (a < 0.0) a += 2.0 * half;
  if (a > half) a = 2.0 * half - a;
  return r * std::cos(a - half) <= rho * std::cos(half) * (1.0 + slack) + slack;
}

namespace {

// Polar Gauss-Legendre product rule over one fundamental wedge, times 4p.
// Each ray is split where it leaves the orbit hull; the outer piece is
// integrated as well, so mass outside the hull would be counted.
double wedge_mass(const EvenDihedralParams& params, double rho,
                  const QuadratureScheme& scheme, std::size_t order) {
  const double half = kPi / (2.0 * params.p());
  const GaussRule angle = gauss_legendre01(order);
  const GaussRule radial = gauss_legendre01(order);
  const GaussRule outer = gauss_legendre01(std::max<std::size_t>(4, order / 4));
  std::vector<double> ray(angle.nodes.size());
  parallel_for(angle.nodes.size(), [&](std::size_t i) {
    const double beta = half * angle.nodes[i];
    const double cb = std::cos(beta);
    const double sb = std::sin(beta);
    const double s_hull = rho * std::cos(half) / std::cos(beta - half);
    auto piece = [&](const GaussRule& rule, double lo, double hi) {
      CompensatedSum<double> acc;
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double s = lo + (hi - lo) * rule.nodes[j];
        acc += rule.weights[j] * s * density_h(params, rho, {s * cb, s * sb}, scheme);
      }
      return (hi - lo) * acc.value();
    };
    ray[i] = piece(radial, 0.0, s_hull) + piece(outer, s_hull, std::max(rho, s_hull));
  });
  CompensatedSum<double> total;
  for (std::size_t i = 0; i < ray.size(); ++i) total += angle.weights[i] * ray[i];
  return 4.0 * params.p() * half * total.value();
}

}  // namespace

EvalResult density_total_mass(const EvenDihedralParams& params, double rho,
                              const QuadratureScheme& scheme, std::size_t order) {
  require_density_domain(params, "density_total_mass");
  if (order < 2) throw std::invalid_argument("density_total_mass: order must be >= 2");
  const double fine = wedge_mass(params, rho, scheme, order);
  const double coarse = wedge_mass(params, rho, scheme, order / 2);
  return {fine, std::abs(fine - coarse), 0, order * order};
}

void DensityGridSpec::validate() const {
  if (resolution < 2) throw std::invalid_argument("density grid resolution must be >= 2");
  if (!(extent > 0.0)) throw std::invalid_argument("density grid extent must be positive");
  if (!(floor >= 0.0)) throw std::invalid_argument("density floor must be nonnegative");
}

double DensityGrid::coordinate(std::size_t m) const {
  return -spec.extent + 2.0 * spec.extent * static_cast<double>(m) /
                            static_cast<double>(spec.resolution - 1);
}

DensityGrid support_probe(const EvenDihedralParams& params, double rho,
                          const DensityGridSpec& spec, const QuadratureScheme& scheme) {
  require_density_domain(params, "support_probe");
  spec.validate();
  DensityGrid grid;
  grid.p = params.p();
  grid.k = params.k();
  grid.rho = rho;
  grid.spec = spec;
  const std::size_t m = spec.resolution;
  grid.values.assign(m * m, 0.0);
  grid.in_hull.assign(m * m, false);

  parallel_for(m * m, [&](std::size_t idx) {
    const Point2 z{grid.coordinate(idx % m), grid.coordinate(idx / m)};
    grid.values[idx] = density_h(params, rho, z, scheme);
  });

  SupportReport& rep = grid.report;
  for (std::size_t idx = 0; idx < m * m; ++idx) {
    const Point2 z{grid.coordinate(idx % m), grid.coordinate(idx / m)};
    const bool hull = in_orbit_hull(params.p(), rho, z);
    grid.in_hull[idx] = hull;
    if (!(grid.values[idx] > spec.floor)) continue;
    ++rep.support_nodes;
    rep.max_support_radius = std::max(rep.max_support_radius, z.norm());
    if (z.norm() > rho) ++rep.outside_rho;
    if (!hull) ++rep.outside_hull;
  }
  rep.within_rho = rep.outside_rho == 0;
  rep.within_hull = rep.outside_hull == 0;
  return grid;
}

void write_density_csv(std::ostream& out, const DensityGrid& grid) {
  const std::size_t m = grid.spec.resolution;
  out << "z1,z2,H,in_hull_flag\n";
  out.precision(17);
  for (std::size_t idx = 0; idx < m * m; ++idx) {
    out << grid.coordinate(idx % m) << ',' << grid.coordinate(idx / m) << ','
        << grid.values[idx] << ',' << (grid.in_hull[idx] ? 1 : 0) << '\n';
  }
}

void write_density_json(std::ostream& out, const DensityGrid& grid) {
  nlohmann::json j;
  j["schema"] = 1;
  j["params"] = {{"p", grid.p}, {"k", grid.k}, {"rho", grid.rho}};
  j["grid"] = {{"extent", grid.spec.extent},
               {"resolution", grid.spec.resolution},
               {"floor", grid.spec.floor},
               {"order", "row-major, z2 outer, z1 inner"}};
  j["values"] = grid.values;
  std::vector<int> hull(grid.in_hull.begin(), grid.in_hull.end());
  j["in_hull"] = hull;
  const SupportReport& r = grid.report;
  j["report"] = {{"support_nodes", r.support_nodes},
                 {"max_support_radius", r.max_support_radius},
                 {"outside_rho", r.outside_rho},
                 {"outside_hull", r.outside_hull},
                 {"within_rho", r.within_rho},
                 {"within_hull", r.within_hull}};
  out << j.dump(2) << '\n';
}

}  // namespace dihedral
