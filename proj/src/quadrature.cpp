#include "dihedral/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "dihedral/compensated_sum.hpp"
#include "dihedral/special.hpp"
#include "dihedral/types.hpp"

namespace dihedral {

std::string_view to_string(QuadratureKind kind) {
  switch (kind) {
    case QuadratureKind::product_rule: return "product";
    case QuadratureKind::dirichlet_monte_carlo: return "mc";
    case QuadratureKind::tanh_sinh: return "tanh-sinh";
  }
  return "unknown";
}

QuadratureKind quadrature_kind_from_string(std::string_view name) {
  if (name == "product") return QuadratureKind::product_rule;
  if (name == "mc") return QuadratureKind::dirichlet_monte_carlo;
  if (name == "tanh-sinh") return QuadratureKind::tanh_sinh;
  throw std::invalid_argument("unknown quadrature scheme '" + std::string(name) +
                              "' (expected product, mc or tanh-sinh)");
}

void QuadratureScheme::validate() const {
  if (order_or_samples < 1) {
    throw std::invalid_argument("quadrature scheme needs order-or-samples >= 1");
  }
  if (kind == QuadratureKind::tanh_sinh && !(tolerance > 0.0)) {
    throw std::invalid_argument("tanh-sinh tolerance must be positive");
  }
}

namespace {

// Nodes (ascending) and weights for (1-x)^alpha (1+x)^beta on [-1, 1],
// weights normalized to sum to one.
void golub_welsch(std::size_t m, double alpha, double beta,
                  std::vector<double>& x, std::vector<double>& w) {
  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(m > 1 ? m - 1 : 1);
  const double ab = alpha + beta;
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (std::size_t j = 1; j < m; ++j) {
    const double s = 2.0 * j + ab;
    diag(j) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    double bj;
    if (j == 1) {
      bj = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      bj = 4.0 * j * (j + alpha) * (j + beta) * (j + ab) /
           (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(j - 1) = std::sqrt(bj);
  }
  x.resize(m);
  w.resize(m);
  if (m == 1) {
    x[0] = diag(0);
    w[0] = 1.0;
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_jacobi: eigenvalue solver failed");
  }
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    w[i] = v0 * v0;
  }
}

}  // namespace

GaussRule gauss_jacobi01(std::size_t order, double a, double b) {
  if (order < 1) throw std::invalid_argument("gauss_jacobi01: order must be >= 1");
  if (!(a > -1.0) || !(b > -1.0)) {
    throw std::invalid_argument("gauss_jacobi01: exponents must exceed -1");
  }
  // t = (1+x)/2 maps t^a (1-t)^b to (1+x)^a (1-x)^b. The mirrored rule gives
  // the nodes near t = 1 as small numbers 1 - t without cancellation.
  std::vector<double> x, w, xm, wm;
  golub_welsch(order, b, a, x, w);
  golub_welsch(order, a, b, xm, wm);
  const double mass = beta(a + 1.0, b + 1.0);

  GaussRule rule;
  rule.nodes.resize(order);
  rule.complements.resize(order);
  rule.weights.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    const double t = 0.5 * (1.0 + x[i]);
    const double tc = 0.5 * (1.0 + xm[order - 1 - i]);
    if (t <= 0.5) {
      rule.nodes[i] = t;
      rule.complements[i] = 1.0 - t;
    } else {
      rule.nodes[i] = 1.0 - tc;
      rule.complements[i] = tc;
    }
    rule.weights[i] = mass * w[i];
  }
  return rule;
}

double log_dirichlet_normalizer(std::span<const double> alphas) {
  double total = 0.0;
  double acc = 0.0;
  for (double a : alphas) {
    acc += std::lgamma(a);
    total += a;
  }
  return acc - std::lgamma(total);
}

SimplexProductRule::SimplexProductRule(std::span<const double> alphas,
                                       std::size_t order)
    : alphas_(alphas.begin(), alphas.end()), order_(order) {
  if (alphas_.empty()) throw std::invalid_argument("simplex rule: empty alphas");
  if (order < 1) throw std::invalid_argument("simplex rule: order must be >= 1");
  for (double a : alphas_) {
    if (!(a > 0.0)) throw std::invalid_argument("simplex rule: alphas must be positive");
  }
  const std::size_t n = alphas_.size();
  // Collapsed coordinate i (1-based, i < n) carries t^{alpha_i - 1}
  // (1-t)^{R_i - 1}, R_i = alpha_0 + alpha_{i+1} + ... + alpha_{n-1}.
  for (std::size_t i = 1; i < n; ++i) {
    double rest = alphas_.back();
    for (std::size_t s = i + 1; s < n; ++s) rest += alphas_[s - 1];
    GaussRule r = gauss_jacobi01(order, alphas_[i - 1] - 1.0, rest - 1.0);
    const double mass = beta(alphas_[i - 1], rest);
    for (double& wt : r.weights) wt /= mass;
    rules_.push_back(std::move(r));
  }
}

std::size_t SimplexProductRule::node_count() const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < rules_.size(); ++i) count *= order_;
  return count;
}

void SimplexProductRule::for_each(
    const std::function<void(std::span<const double>, double)>& fn) const {
  const std::size_t n = alphas_.size();
  std::vector<double> u(n, 0.0);
  if (n == 1) {
    u[0] = 1.0;
    fn(u, 1.0);
    return;
  }
  const std::size_t dims = n - 1;
  std::vector<std::size_t> idx(dims, 0);
  while (true) {
    double remaining = 1.0;
    double weight = 1.0;
    for (std::size_t i = 0; i < dims; ++i) {
      const GaussRule& r = rules_[i];
      u[i] = remaining * r.nodes[idx[i]];
      remaining *= r.complements[idx[i]];
      weight *= r.weights[idx[i]];
    }
    u[n - 1] = remaining;
    fn(u, weight);

    std::size_t d = dims;
    while (d > 0) {
      --d;
      if (++idx[d] < order_) break;
      idx[d] = 0;
      if (d == 0) return;
    }
  }
}

double SimplexProductRule::integrate(
    const std::function<double(std::span<const double>)>& fn) const {
  CompensatedSum<double> sum;
  for_each([&](std::span<const double> u, double w) { sum += w * fn(u); });
  return sum.value();
}

DoubleExponentialResult tanh_sinh_integrate(
    const std::function<double(double, double, double)>& fn, double a, double b,
    double rel_tol, std::size_t max_refinements) {
  if (!(b > a)) return {0.0, 0.0};
  using Integrator = boost::math::quadrature::tanh_sinh<double>;
  static thread_local std::map<std::size_t, Integrator> integrators;
  auto& integrator = integrators.try_emplace(max_refinements, max_refinements).first->second;
  const double width = b - a;
  auto f = [&](double x, double xc) {
    double left, right;
    if (xc < 0.0) {
      left = -xc;
      right = width - left;
    } else {
      right = xc;
      left = width - right;
    }
    return fn(x, left, right);
  };
  double error = 0.0;
  double l1 = 0.0;
  const double value = integrator.integrate(f, a, b, rel_tol, &error, &l1);
  return {value, error};
}

}  // namespace dihedral
