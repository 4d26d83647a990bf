#pragma once

// D_k as an expectation over the standard simplex,
//
//   D_k(x, y) = E_{Dir(k,...,k)} [ exp(rho r (u_0 cos(theta-phi)
//                                   + sum_{s<n} u_s b_s))
//                                  0F_{n-1}(2k, k, ..., k; X u_0 ... u_{n-1}) ],
//
// with X = -4 (rho r / 2)^n sin(n theta) sin(n phi). The weight prod u^{k-1}
// is carried by the sampling law (Monte Carlo) or by the Gauss-Jacobi
// factors of the collapsed product rule, never by the integrand.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dihedral/dihedral_series.hpp"
#include "dihedral/types.hpp"

namespace dihedral {

/// Barycentric point stored as (u_1, ..., u_{n-1}, u_0).
struct SimplexPoint {
  std::vector<double> coords;

  double u0() const { return coords.back(); }
  std::size_t dimension() const { return coords.size(); }
  /// Nonnegative coordinates summing to one within `tol`.
  bool is_valid(double tol = 1e-14) const;
};

/// i.i.d. Dirichlet(alphas) samples; sample i depends only on (seed, i).
std::vector<SimplexPoint> dirichlet_sample(std::span<const double> alphas,
                                           std::size_t count, std::uint64_t seed);

/// Ratio of the numerical integral of u_0^{beta_n-1} prod u_s^{beta_s-1}
/// over the simplex to prod Gamma(beta_s) / Gamma(sum beta). `betas` follows
/// the (u_1, ..., u_{n-1}, u_0) order.
///
/// product_rule integrates against the Dirichlet law with exponents
/// beta_s - ceil(beta_s) + 1, leaving polynomial residuals. Monte Carlo uses
/// importance sampling from Dirichlet(0.9 beta). `error` is the rule
/// difference or the standard error of the ratio.
EvalResult dirichlet_moment_check(std::span<const double> betas,
                                  const QuadratureScheme& scheme);

/// The smooth part of the simplex integrand for fixed (n, k, x, y).
class SimplexKernel {
 public:
  SimplexKernel(const DihedralParams& params, PolarPoint x, PolarPoint y);

  double exp_factor(std::span<const double> u) const;
  double hyp_factor(std::span<const double> u) const;
  double operator()(std::span<const double> u) const {
    return exp_factor(u) * hyp_factor(u);
  }
  /// X = -4 (rho r/2)^n sin(n theta) sin(n phi).
  double cross() const { return cross_; }

 private:
  int n_;
  double v_;
  double cos_diff_;
  std::vector<double> b_;  // b_1 .. b_{n-1}
  std::vector<double> hyp_params_;
  double cross_;
};

/// E_{Dir(alphas)}[fn] by the product rule (error: difference to a rule of
/// half the order) or by Monte Carlo (error: standard error). Enforces
/// cfg.sample_budget; tanh_sinh is rejected.
EvalResult simplex_expectation(std::span<const double> alphas,
                               const QuadratureScheme& scheme, const EvalConfig& cfg,
                               const std::function<double(std::span<const double>)>& fn);

EvalResult eval_simplex_integral(const DihedralParams& params, PolarPoint x,
                                 PolarPoint y, const QuadratureScheme& scheme,
                                 const EvalConfig& cfg = {});

}  // namespace dihedral
