#pragma once

/// \file solver.hpp
/// Exterior stream-function problem by a single-layer Nystrom method.
///
/// The exterior stream function is represented as psi(x) = oint G(x, y)
/// sigma(y) ds_y. On the boundary, psi = S sigma and the exterior normal
/// derivative follows from the jump relation
///
///   d_n psi = -r sigma / 2 + oint d_{n_x} G(x, y) sigma(y) ds_y,
///
/// so the circulation -oint (1/r) d_n psi ds equals oint sigma ds. The
/// Dirichlet data W r^2/2 + gamma has the flux constant gamma as an extra
/// unknown, closed by prescribing the circulation.
///
/// Both boundary operators have kernels of the form
/// k1(t, tau) ln(4 sin^2((t - tau)/2)) + k2(t, tau) with k1, k2 smooth; the
/// log part is integrated exactly against trigonometric interpolants, which
/// keeps the scheme spectrally accurate on smooth curves.
///
/// Everything here works in normalized units (a = 1, beta = 1) by
/// convention of the callers; the solver itself is scale-agnostic.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bubblering/geometry/cross_section.hpp"
#include "bubblering/geometry/functionals.hpp"

namespace bubblering::stream {

using geometry::BoundaryNodes;
using geometry::CrossSection;
using geometry::Point;

/// Consistency target for the circulation and the Dirichlet trace.
inline constexpr double kSolverTolerance = 1e-8;
/// Solves whose estimated condition number exceeds this fail.
inline constexpr double kMaxCondition = 1e12;
/// Largest grid the automatic refinement of solve_dirichlet will try.
inline constexpr int kMaxSolverResolution = 2048;

struct BoundarySolution {
  int resolution = 0;
  BoundaryNodes nodes;
  std::vector<double> density;    // sigma, per unit arc length
  std::vector<double> psi_trace;  // S sigma at the nodes
  std::vector<double> dn_psi;     // exterior normal derivative
  double W = 0.0;
  double gamma = 0.0;
  double circulation = 0.0;       // -oint (1/r) d_n psi ds
  double circulation_target = 1.0;
  double condition_estimate = 0.0;
  /// max |psi_trace - (W r^2/2 + gamma)| for Dirichlet solves, or against
  /// the prescribed data for solve_with_data.
  double trace_error = 0.0;
};

/// Assembled and factorized single-layer system for one smooth shape at one
/// resolution. Immutable after construction; solves are const.
class BoundaryOperator {
 public:
  explicit BoundaryOperator(const CrossSection& shape);

  int resolution() const noexcept { return n_; }
  const BoundaryNodes& nodes() const noexcept { return nodes_; }
  double condition_estimate() const noexcept { return condition_; }

  /// Data W r^2/2 + gamma with gamma unknown.
  BoundarySolution solve(double W, double circulation = 1.0) const;

  /// Data f + gamma with gamma unknown; f is sampled at the nodes.
  BoundarySolution solve_with_data(std::span<const double> data,
                                   double circulation) const;

  /// Traces and circulation of an arbitrary density, with Dirichlet data
  /// W r^2/2 + gamma used only for trace_error.
  BoundarySolution from_density(std::span<const double> density, double W,
                                double gamma) const;

  /// psi on the boundary at an arbitrary parameter t, using the same
  /// singular quadrature as the collocation rows.
  double boundary_value(const BoundarySolution& sol, double t) const;

 private:
  CrossSection shape_;
  int n_;
  BoundaryNodes nodes_;
  Eigen::MatrixXd single_;  // S, n x n
  Eigen::MatrixXd normal_;  // principal-value part of d_n S, n x n
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;  // bordered (n+1) x (n+1) system
  double condition_ = 0.0;

  BoundarySolution finish(const Eigen::VectorXd& rhs, double circulation) const;
  BoundarySolution build(const Eigen::VectorXd& sigma, double gamma,
                         const Eigen::VectorXd& data) const;
};

/// Single-layer solve with Dirichlet data W r^2/2 + gamma and unit
/// circulation. Starts at the shape's resolution and doubles (up to
/// kMaxSolverResolution) until the circulation recovered from d_n psi agrees
/// with the target to kSolverTolerance. Throws UnsupportedShapeError for
/// polygons and SolverError if the system is ill-conditioned or the
/// refinement does not converge.
BoundarySolution solve_dirichlet(const CrossSection& shape, double W);

/// Exterior psi at an off-boundary point by the trapezoidal rule. Accurate
/// once the point is a few node spacings away from the boundary. Points on
/// the axis return 0.
double exterior_psi(const BoundarySolution& sol, Point x);

/// Kress log-quadrature weight R_j(t) for node t_j = 2 pi j / N, N = 2n:
///   -(2pi/n) sum_{m=1}^{n-1} cos(m (t - t_j)) / m - (pi/n^2) cos(n (t - t_j)).
double log_weight(int N, int j, double t);

}  // namespace bubblering::stream
