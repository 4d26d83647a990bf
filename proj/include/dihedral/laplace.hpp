#pragma once

// Even dihedral groups (order 4p). On the wedge boundary x = (rho, 0),
//
//   D_k(rho, y) = E_{Dir_p(k)} [ i_{pk-1/2}((rho / sqrt 2) sqrt(Q(u))) ],
//   Q(u) = |y|^2 + (y1^2 - y2^2)(u_0 + sum u_s A_s) + 2 y1 y2 sum u_s B_s,
//
// and the Laplace-type form D_k(rho, y) = int e^{<y, z>} H_p(rho, z) dz.
//
// The unit-disk identity behind the latter needs the constant
// K = (pk - 1/2) / pi:
//   i_nu(|w|) = K int_{|z|<1} e^{<w, z>} (1 - |z|^2)^{nu - 1} dz,  nu = pk - 1/2.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "dihedral/dihedral_series.hpp"
#include "dihedral/types.hpp"

namespace dihedral {

class EvenDihedralParams {
 public:
  /// Throws std::invalid_argument unless p >= 1 and k > 0.
  EvenDihedralParams(int p, double k);

  int p() const { return p_; }
  double k() const { return k_; }
  /// nu = pk - 1/2, the index of the normalized Bessel function.
  double nu() const { return p_ * k_ - 0.5; }
  /// A_s = cos(2 s pi / p), s = 1..p-1 (index s-1).
  const std::vector<double>& A() const { return a_; }
  /// B_s = -sin(2 s pi / p), s = 1..p-1 (index s-1).
  const std::vector<double>& B() const { return b_; }
  DihedralParams as_dihedral() const { return DihedralParams(2 * p_, k_); }

 private:
  int p_;
  double k_;
  std::vector<double> a_;
  std::vector<double> b_;
};

struct Point2 {
  double z1 = 0.0;
  double z2 = 0.0;
  double norm() const;
};

/// a, b, c on the simplex with a^2 = 1 + X, ab = Y, (ac)^2 = 1 - X^2 - Y^2,
/// where X = u_0 + sum u_s A_s and Y = sum u_s B_s. When a vanishes, b and c
/// are NaN and only the products ab, ac are meaningful.
struct ABCCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double ab = 0.0;
  double ac = 0.0;
  double x_sum = 0.0;
  double y_sum = 0.0;
  bool degenerate = false;
};

/// `u` is (u_1, ..., u_{p-1}, u_0). Throws std::domain_error if the radicand
/// is below -1e-12 (impossible for a point of the simplex).
ABCCoeffs abc(const EvenDihedralParams& params, std::span<const double> u);

/// D_k((rho, 0), y) for the group of order 4p. p = 1 is evaluated in closed
/// form as i_{k-1/2}(rho |y1|); otherwise the simplex expectation uses the
/// product rule or Dirichlet Monte Carlo.
EvalResult eval_boundary_bessel(const EvenDihedralParams& params, double rho,
                                PolarPoint y, const QuadratureScheme& scheme,
                                const EvalConfig& cfg = {});

/// H_p(rho, z). tanh_sinh integrates over collapsed simplex coordinates,
/// cutting the last one at the roots of the cubic that bounds the region;
/// product and mc are accepted only when pk >= 3/2. Requires p >= 2 and
/// pk > 1/2. Returns 0 when the region is empty.
double density_h(const EvenDihedralParams& params, double rho, Point2 z,
                 const QuadratureScheme& scheme);

/// D_k((rho, 0), y) through the Laplace form: for each simplex node the
/// ellipse integral is mapped to the unit disk and evaluated numerically
/// (Gauss-Jacobi radial rule absorbing (1 - s)^{nu - 1}, trapezoid in angle).
/// Requires p >= 2 and pk > 1/2.
EvalResult eval_laplace(const EvenDihedralParams& params, double rho, PolarPoint y,
                        const QuadratureScheme& scheme, const EvalConfig& cfg = {});

/// K int_{|z|<1} e^{<w, z>} (1 - |z|^2)^{nu_exp - 3/2} dz. The radial rule is
/// tanh-sinh (scheme.tolerance) or Gauss-Jacobi (scheme.order_or_samples).
double disk_integral(double nu_exp, Point2 w, const QuadratureScheme& scheme);

struct DiskIdentityResult {
  double integral = 0.0;
  double series = 0.0;
  double deviation = 0.0;  // relative
};

/// Compares disk_integral with bessel_i_norm(nu_exp - 1/2, |w|).
DiskIdentityResult disk_bessel_identity(double nu_exp, Point2 w,
                                        const QuadratureScheme& scheme);

/// True when z lies in the convex hull of {rho e^{i s pi / p}}.
bool in_orbit_hull(int p, double rho, Point2 z, double slack = 1e-12);

/// Total mass of H_p: a polar Gauss-Legendre product rule of the given order
/// on one fundamental wedge, multiplied by the group order 4p. Rays are
/// split at the orbit hull. `error` compares against half the order.
EvalResult density_total_mass(const EvenDihedralParams& params, double rho,
                              const QuadratureScheme& scheme, std::size_t order = 24);

struct DensityGridSpec {
  double extent = 1.2;       // grid covers [-extent, extent]^2
  std::size_t resolution = 41;
  double floor = 1e-12;      // values above this count as support

  void validate() const;
};

struct SupportReport {
  double max_support_radius = 0.0;
  std::size_t support_nodes = 0;
  std::size_t outside_rho = 0;   // support nodes with |z| > rho
  std::size_t outside_hull = 0;  // support nodes outside the orbit hull
  bool within_rho = true;
  bool within_hull = true;
};

/// Row-major grid: node (i, j) sits at z1 = x_j, z2 = x_i with
/// x_m = -extent + 2 extent m / (resolution - 1).
struct DensityGrid {
  int p = 0;
  double k = 0.0;
  double rho = 0.0;
  DensityGridSpec spec;
  std::vector<double> values;
  std::vector<bool> in_hull;
  SupportReport report;

  double coordinate(std::size_t m) const;
};

DensityGrid support_probe(const EvenDihedralParams& params, double rho,
                          const DensityGridSpec& spec, const QuadratureScheme& scheme);

/// CSV with header z1,z2,H,in_hull_flag, one row per node in grid order.
void write_density_csv(std::ostream& out, const DensityGrid& grid);
/// JSON object with "schema": 1, grid spec, row-major values and the report.
void write_density_json(std::ostream& out, const DensityGrid& grid);

}  // namespace dihedral
