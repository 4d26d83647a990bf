#pragma once

// Series representations of the generalized Bessel function D_k attached to
// the dihedral group of order 2n with constant multiplicity k:
//
//  * the polar Gegenbauer/Bessel double series,
//  * the series of confluent Horn functions Phi_2^{(n)},
//
// and the finite sums S_N(n, k, phi, theta) that link them, computed both by
// direct enumeration over 2m + nj = N and by the composition formula.
//
// D_k is normalized by D_k(0, y) = 1, which fixes the constant
// c_{n,k} = n B(k + 1/2, 1/2) Gamma(nk).

#include <vector>

#include "dihedral/types.hpp"

namespace dihedral {

class DihedralParams {
 public:
  /// Throws std::invalid_argument unless n >= 2 and k > 0.
  DihedralParams(int n, double k);

  int n() const { return n_; }
  double k() const { return k_; }
  /// gamma = n k.
  double gamma_exp() const { return n_ * k_; }

 private:
  int n_;
  double k_;
};

struct PolarPoint {
  double radius = 0.0;
  double angle = 0.0;

  static PolarPoint from_cartesian(double x1, double x2);
  double x1() const;
  double x2() const;
};

/// b_s = cos(theta + 2 pi s / n), s = 1..n.
struct BCoeffs {
  double theta = 0.0;
  int n = 0;
  std::vector<double> values;
};

BCoeffs make_bcoeffs(double theta, int n);

/// Representative of `point` in the closed wedge [0, pi/n], using the
/// rotation theta -> theta + 2 pi/n and the reflection theta -> -theta.
PolarPoint wedge_reduce(PolarPoint point, int n);

/// log c_{n,k} = log(n B(k+1/2, 1/2) Gamma(nk)).
double log_normalization_constant(int n, double k);

/// Exact finite sum over {(j, m) : 2m + nj = N}. Requires n >= 3.
double s_n_direct(const DihedralParams& params, double phi, double theta,
                  unsigned N);

/// Composition form of S_N: sum over m_1 + ... + m_n = N and
/// j <= min(m_s). Throws CapacityError past `composition_cap` inner terms.
double s_n_closed(const DihedralParams& params, double phi, double theta,
                  unsigned N, std::size_t composition_cap = 10'000'000);

/// S_N at phi = 0 as the degree-N coefficient of prod_s (1 - b_s t)^{-k}
/// (an independent route to the boundary case of s_n_closed).
double s_n_boundary(const DihedralParams& params, double theta, unsigned N);

EvalResult eval_gegenbauer_series(const DihedralParams& params, PolarPoint x,
                                  PolarPoint y, const EvalConfig& cfg = {});

EvalResult eval_horn_series(const DihedralParams& params, PolarPoint x,
                            PolarPoint y, const EvalConfig& cfg = {});

/// Phi_2^{(n)}(k, ..., k; nk; rho r b_1, ..., rho r b_n) with the same
/// normalization as eval_horn_series, i.e. D_k((rho, 0), (r, theta)).
EvalResult boundary_horn(const DihedralParams& params, double rho, double r,
                         double theta, const EvalConfig& cfg = {});

/// Evaluates D(0, y) by both series at a few angles and throws
/// std::logic_error if it differs from one by more than 1e-12.
void verify_normalization(const DihedralParams& params);

}  // namespace dihedral
