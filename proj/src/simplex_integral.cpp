#include "dihedral/simplex_integral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dihedral/quadrature.hpp"
#include "dihedral/random.hpp"
#include "dihedral/special.hpp"

namespace dihedral {

namespace {

void require_positive(std::span<const double> alphas, const char* what) {
  if (alphas.empty()) throw std::invalid_argument(std::string(what) + ": empty parameter list");
  for (double a : alphas) {
    if (!(a > 0.0)) {
      throw std::invalid_argument(std::string(what) + ": parameters must be positive");
    }
  }
}

// Coarser companion order used for rule-difference error estimates.
std::size_t coarse_order(std::size_t order) { return std::max<std::size_t>(1, (order + 1) / 2); }

}  // namespace

bool SimplexPoint::is_valid(double tol) const {
  if (coords.empty()) return false;
  double total = 0.0;
  for (double c : coords) {
    if (!(c >= 0.0)) return false;
    total += c;
  }
  return std::abs(total - 1.0) <= tol;
}

std::vector<SimplexPoint> dirichlet_sample(std::span<const double> alphas,
                                           std::size_t count, std::uint64_t seed) {
  require_positive(alphas, "dirichlet_sample");
  std::vector<SimplexPoint> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    CounterRng rng(seed, i);
    out[i].coords.resize(alphas.size());
    draw_dirichlet(rng, alphas, out[i].coords);
  }
  return out;
}

EvalResult dirichlet_moment_check(std::span<const double> betas,
                                  const QuadratureScheme& scheme) {
  require_positive(betas, "dirichlet_moment_check");
  scheme.validate();
  const std::size_t n = betas.size();
  const double log_target = log_dirichlet_normalizer(betas);

  if (scheme.kind == QuadratureKind::product_rule) {
    std::vector<double> alphas(n);
    std::vector<int> powers(n);
    for (std::size_t s = 0; s < n; ++s) {
      const double shift = std::ceil(betas[s]) - 1.0;
      alphas[s] = betas[s] - shift;
      powers[s] = static_cast<int>(shift);
    }
    auto residual = [&](std::span<const double> u) {
      double f = 1.0;
      for (std::size_t s = 0; s < n; ++s) f *= std::pow(u[s], powers[s]);
      return f;
    };
    const double scale = std::exp(log_dirichlet_normalizer(alphas) - log_target);
    const double fine = SimplexProductRule(alphas, scheme.order_or_samples).integrate(residual);
    const double coarse =
        SimplexProductRule(alphas, coarse_order(scheme.order_or_samples)).integrate(residual);
    return {scale * fine, scale * std::abs(fine - coarse), 0, 0};
  }

  if (scheme.kind == QuadratureKind::dirichlet_monte_carlo) {
    std::vector<double> proposal(n);
    for (std::size_t s = 0; s < n; ++s) proposal[s] = 0.9 * betas[s];
    const double scale = std::exp(log_dirichlet_normalizer(proposal) - log_target);
    const MonteCarloEstimate est = dirichlet_expectation(
        proposal, scheme.order_or_samples, scheme.seed, [&](std::span<const double> u) {
          double log_w = 0.0;
          for (std::size_t s = 0; s < n; ++s) log_w += (betas[s] - proposal[s]) * std::log(u[s]);
          return std::exp(log_w);
        });
    return {scale * est.mean, scale * est.std_error, 0, est.samples};
  }

  throw std::invalid_argument("dirichlet_moment_check: scheme must be product or mc");
}

SimplexKernel::SimplexKernel(const DihedralParams& params, PolarPoint x, PolarPoint y)
    : n_(params.n()), v_(x.radius * y.radius), cos_diff_(std::cos(y.angle - x.angle)) {
  const BCoeffs b = make_bcoeffs(y.angle - x.angle, n_);
  b_.assign(b.values.begin(), b.values.end() - 1);
  hyp_params_.assign(n_ - 1, params.k());
  hyp_params_[0] = 2.0 * params.k();
  cross_ = -4.0 * std::pow(0.5 * v_, n_) * std::sin(n_ * y.angle) * std::sin(n_ * x.angle);
}

double SimplexKernel::exp_factor(std::span<const double> u) const {
  double arg = u[n_ - 1] * cos_diff_;
  for (int s = 0; s + 1 < n_; ++s) arg += u[s] * b_[s];
  return std::exp(v_ * arg);
}

double SimplexKernel::hyp_factor(std::span<const double> u) const {
  if (cross_ == 0.0) return 1.0;
  double prod = 1.0;
  for (int s = 0; s < n_; ++s) prod *= u[s];
  return hyp_0f(hyp_params_, cross_ * prod).value;
}

EvalResult simplex_expectation(std::span<const double> alphas,
                               const QuadratureScheme& scheme, const EvalConfig& cfg,
                               const std::function<double(std::span<const double>)>& fn) {
  scheme.validate();
  switch (scheme.kind) {
    case QuadratureKind::dirichlet_monte_carlo: {
      if (scheme.order_or_samples > cfg.sample_budget) {
        throw CapacityError(std::to_string(scheme.order_or_samples) +
                            " samples exceed the budget of " +
                            std::to_string(cfg.sample_budget));
      }
      const MonteCarloEstimate est =
          dirichlet_expectation(alphas, scheme.order_or_samples, scheme.seed, fn);
      return {est.mean, est.std_error, 0, est.samples};
    }
    case QuadratureKind::product_rule: {
      const SimplexProductRule fine(alphas, scheme.order_or_samples);
      if (fine.node_count() > cfg.sample_budget) {
        throw CapacityError("product rule node count exceeds the sample budget");
      }
      const SimplexProductRule coarse(alphas, coarse_order(scheme.order_or_samples));
      const double value = fine.integrate(fn);
      const double rough = coarse.integrate(fn);
      return {value, std::abs(value - rough), 0, fine.node_count()};
    }
    case QuadratureKind::tanh_sinh:
      break;
  }
  throw std::invalid_argument("simplex expectation: scheme must be product or mc");
}

EvalResult eval_simplex_integral(const DihedralParams& params, PolarPoint x,
                                 PolarPoint y, const QuadratureScheme& scheme,
                                 const EvalConfig& cfg) {
  if (params.n() < 3) throw std::invalid_argument("eval_simplex_integral: requires n >= 3");
  if (!(x.radius >= 0.0) || !(y.radius >= 0.0)) {
    throw std::invalid_argument("eval_simplex_integral: radii must be nonnegative");
  }
  if (cfg.reduce_angles) {
    x = wedge_reduce(x, params.n());
    y = wedge_reduce(y, params.n());
  }
  const SimplexKernel kernel(params, x, y);
  const std::vector<double> alphas(params.n(), params.k());
  auto checked = [&](std::span<const double> u) {
    const double f = kernel(u);
    if (!std::isfinite(f)) {
      throw std::domain_error("eval_simplex_integral: non-finite integrand");
    }
    return f;
  };

  return simplex_expectation(alphas, scheme, cfg, checked);
}

}  // namespace dihedral
