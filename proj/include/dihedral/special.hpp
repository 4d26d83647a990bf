#pragma once

// Scalar special functions shared by every representation of the dihedral
// generalized Bessel function. Everything here is real-valued, evaluated by
// explicit series or recurrences so that truncation can be reported.

#include <span>
#include <vector>

#include "dihedral/types.hpp"

namespace dihedral {

/// Rising factorial (x)_m = x (x+1) ... (x+m-1); (x)_0 = 1.
double pochhammer(double x, unsigned m);

/// log|(x)_m| for x > 0, via log-gamma.
double log_pochhammer(double x, double m);

double log_beta(double a, double b);
double beta(double a, double b);

/// Non-orthonormal Gegenbauer polynomial C_j^{(k)}(z), |z| <= 1, by the
/// three-term recurrence. Throws std::invalid_argument when k <= 0.
double gegenbauer(unsigned j, double k, double z);

/// C_j^{(k)}(1) = (2k)_j / j!.
double gegenbauer_at_one(unsigned j, double k);

/// Chebyshev polynomial of the first kind T_n(z).
double chebyshev_t(unsigned n, double z);

/// Monomial coefficients of T_n, lowest degree first.
std::vector<double> chebyshev_t_coefficients(unsigned n);

/// Modified Bessel function of the first kind I_nu(v) from its power series.
SeriesValue bessel_i(double nu, double v);

/// Normalized i_nu(v) = Gamma(nu+1) (2/v)^nu I_nu(v)
///                    = sum_m (v/2)^{2m} / (m! (nu+1)_m),   nu > -1.
SeriesValue bessel_i_norm(double nu, double v);

/// Gauss series 2F1(a, b; c; z) for |z| < 1. Throws ConvergenceError when
/// |z| >= 1 or the series does not settle within the term cap.
SeriesValue gauss_2f1(double a, double b, double c, double z,
                      bool extended_precision = false);

/// 2F1(a, b; c; z) for real z < 1. Negative arguments go through the Pfaff
/// transformation so that the summed series has argument in [0, 1).
SeriesValue gauss_2f1_real(double a, double b, double c, double z);

/// 0F_{q}(params; z) = sum_j z^j / (j! prod_i (params_i)_j). Entire in z.
SeriesValue hyp_0f(std::span<const double> params, double z);

struct HornArgs {
  std::vector<double> betas;
  double gamma = 1.0;
  std::vector<double> zs;

  void validate() const;
};

/// Confluent Horn function Phi_2^{(n)}(betas; gamma; zs), summed by total
/// degree. The degree-N coefficient is the convolution of the univariate
/// sequences (beta_s)_m z_s^m / m!, divided by (gamma)_N.
SeriesValue horn_phi2(const HornArgs& args, const EvalConfig& cfg = {});

}  // namespace dihedral
