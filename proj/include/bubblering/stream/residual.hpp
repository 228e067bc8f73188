#pragma once

/// \file residual.hpp
/// Defect of the dynamic boundary condition
///
///   2H + lambda = We ((1/r) d_n psi - W n_r)^2   on the boundary,
///
/// for a solution of the Dirichlet problem. Integrating it gives
/// 2 oint H ds + lambda |dE| = We oint (...)^2 ds, whose gap is reported
/// separately, together with the positive part of d_n Psi,
/// Psi = psi - W r^2/2, which must be nonpositive for an admissible flow.

#include <vector>

#include "bubblering/stream/solver.hpp"

namespace bubblering::stream {

struct ResidualReport {
  double dyn_residual_l2 = 0.0;   // (oint d^2 ds)^{1/2}
  double dyn_residual_max = 0.0;  // max |d| over nodes
  double identity15_gap = 0.0;    // |2 oint H + lambda |dE| - We oint q^2|
  double identity15_gap_relative = 0.0;  // gap / oint |H| ds
  double max_principle_violation = 0.0;  // oint max(d_n Psi, 0) ds
  double lambda = 0.0;
  double we = 0.0;
  double W = 0.0;
  double perimeter = 0.0;
  double total_mean_curvature = 0.0;  // oint H ds
  std::vector<double> pointwise;      // d at the nodes
};

/// Throws UnsupportedShapeError for polygons, std::invalid_argument if
/// we <= 0, lambda < 0 or `sol` was not computed on `shape`.
ResidualReport dynamic_residual(const CrossSection& shape,
                                const BoundarySolution& sol, double we,
                                double lambda);

}  // namespace bubblering::stream
