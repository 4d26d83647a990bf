#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dihedral {

/// Nodes and weights on [0, 1]. `complements[i] == 1 - nodes[i]`, computed
/// without cancellation so endpoint-singular weights can be evaluated.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> complements;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight t^a (1-t)^b on [0, 1], a, b > -1,
/// via Golub-Welsch. Weights sum to B(a+1, b+1).
GaussRule gauss_jacobi01(std::size_t order, double a, double b);

/// Gauss-Legendre rule on [0, 1].
inline GaussRule gauss_legendre01(std::size_t order) {
  return gauss_jacobi01(order, 0.0, 0.0);
}

/// Log of the Dirichlet normalizer prod Gamma(alpha_s) / Gamma(sum alpha).
double log_dirichlet_normalizer(std::span<const double> alphas);

/// Collapsed-coordinate (conical) product rule on the standard simplex with
/// the Dirichlet weight u_1^{alpha_1-1} ... u_{n-1}^{alpha_{n-1}-1}
/// u_0^{alpha_0-1} built into the weights.
///
/// Coordinates follow the (u_1, ..., u_{n-1}, u_0) convention; `alphas` uses
/// the same order. Weights are normalized to sum to one, so a sweep returns
/// the expectation under Dirichlet(alphas).
class SimplexProductRule {
 public:
  SimplexProductRule(std::span<const double> alphas, std::size_t order);

  std::size_t dimension() const { return alphas_.size(); }
  std::size_t order() const { return order_; }
  std::size_t node_count() const;

  /// Calls fn(u, w) for every node; u has dimension() entries.
  void for_each(const std::function<void(std::span<const double>, double)>& fn) const;

  /// Weighted sum of fn over the nodes.
  double integrate(const std::function<double(std::span<const double>)>& fn) const;

 private:
  std::vector<double> alphas_;
  std::size_t order_;
  std::vector<GaussRule> rules_;  // one per collapsed coordinate
};

struct DoubleExponentialResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive tanh-sinh quadrature on [a, b]. The integrand receives
/// `(x, x - a, b - x)`; each distance is exact near its own endpoint, so
/// endpoint-singular factors can be evaluated without cancellation.
/// `max_refinements` bounds the work (each level doubles the abscissae).
DoubleExponentialResult tanh_sinh_integrate(
    const std::function<double(double, double, double)>& fn, double a, double b,
    double rel_tol, std::size_t max_refinements = 15);

}  // namespace dihedral
