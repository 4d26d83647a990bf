#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dihedral {

/// Raised when a series or quadrature hits its cap before meeting tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured work cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncated series: partial sum, an estimate of the discarded tail, and
/// the number of terms that went into the sum.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  std::size_t terms_used = 0;
};

/// Value of one representation of the generalized Bessel function.
///
/// `error` is a truncation bound for series, a standard error for Monte Carlo
/// and a rule-difference estimate for deterministic quadrature.
struct EvalResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t terms_used = 0;
  std::size_t samples_used = 0;
};

enum class QuadratureKind {
  /// Collapsed-coordinate Gauss-Jacobi product rule on the simplex.
  product_rule,
  /// Dirichlet(k,...,k) sampling with the simplex weight absorbed.
  dirichlet_monte_carlo,
  /// Double-exponential rule; the only kind accepted for singular integrands.
  tanh_sinh,
};

std::string_view to_string(QuadratureKind kind);
QuadratureKind quadrature_kind_from_string(std::string_view name);

inline constexpr std::uint64_t kDefaultSeed = 42;

struct QuadratureScheme {
  QuadratureKind kind = QuadratureKind::dirichlet_monte_carlo;
  /// Points per collapsed coordinate for the product rule, sample count for
  /// Monte Carlo. Ignored by tanh_sinh.
  std::size_t order_or_samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  /// Target relative tolerance for tanh_sinh.
  double tolerance = 1e-9;

  void validate() const;

  static QuadratureScheme product(std::size_t order) {
    return {QuadratureKind::product_rule, order, kDefaultSeed, 1e-9};
  }
  static QuadratureScheme monte_carlo(std::size_t samples,
                                      std::uint64_t seed = kDefaultSeed) {
    return {QuadratureKind::dirichlet_monte_carlo, samples, seed, 1e-9};
  }
  static QuadratureScheme double_exponential(double tol = 1e-9) {
    return {QuadratureKind::tanh_sinh, 1, kDefaultSeed, tol};
  }
};

struct EvalConfig {
  double rel_tol = 1e-16;
  double abs_tol = 1e-300;
  /// Consecutive below-tolerance contributions required to stop a series.
  int window = 5;
  /// Cap on outer series terms (Gegenbauer index j, Horn outer j).
  std::size_t max_terms = 2000;
  /// Cap on the total degree of a Horn series.
  std::size_t horn_degree_cap = 1500;
  /// Accumulate cancellation-prone sums in long double.
  bool extended_precision = false;
  /// Map input angles into the closed wedge before evaluating.
  bool reduce_angles = true;
  /// Cap on inner terms for composition enumeration.
  std::size_t composition_cap = 10'000'000;
  /// Cap on Monte Carlo samples accepted by any evaluator.
  std::size_t sample_budget = 100'000'000;
};

}  // namespace dihedral
