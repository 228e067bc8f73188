#include "bubblering/stream/residual.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bubblering/errors.hpp"

namespace bubblering::stream {

ResidualReport dynamic_residual(const CrossSection& shape,
                                const BoundarySolution& sol, double we,
                                double lambda) {
  if (!shape.is_smooth()) {
    throw UnsupportedShapeError(
        "dynamic_residual needs pointwise mean curvature; polygons have none");
  }
  if (!(we > 0.0) || !std::isfinite(we)) {
    throw std::invalid_argument("dynamic_residual: We must be positive");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("dynamic_residual: lambda must be >= 0");
  }
  const BoundaryNodes expect =
      geometry::boundary_nodes(shape.with_resolution(sol.resolution));
  const std::size_t n = expect.size();
  if (sol.nodes.size() != n || sol.dn_psi.size() != n) {
    throw std::invalid_argument("dynamic_residual: solution size mismatch");
  }
  const double tol = 1e-12 * shape.length_scale();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(expect.position[i].r - sol.nodes.position[i].r) > tol ||
        std::abs(expect.position[i].z - sol.nodes.position[i].z) > tol) {
      throw std::invalid_argument(
          "dynamic_residual: solution was not computed on this shape");
    }
  }

  ResidualReport rep;
  rep.lambda = lambda;
  rep.we = we;
  rep.W = sol.W;
  rep.pointwise.resize(n);
  double h_int = 0.0, h_abs = 0.0, q2_int = 0.0, l2 = 0.0, mp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = expect.position[i].r;
    const double nr = expect.normal[i].r;
    const double w = expect.weight[i];
    const double H = expect.curvature[i] + nr / r;
    const double q = sol.dn_psi[i] / r - sol.W * nr;
    const double d = 2.0 * H + lambda - we * q * q;
    rep.pointwise[i] = d;
    rep.dyn_residual_max = std::max(rep.dyn_residual_max, std::abs(d));
    l2 += d * d * w;
    h_int += H * w;
    h_abs += std::abs(H) * w;
    q2_int += q * q * w;
    rep.perimeter += w;
    mp += std::max(sol.dn_psi[i] - sol.W * r * nr, 0.0) * w;
  }
  rep.dyn_residual_l2 = std::sqrt(l2);
  rep.total_mean_curvature = h_int;
  rep.identity15_gap =
      std::abs(2.0 * h_int + lambda * rep.perimeter - we * q2_int);
  rep.identity15_gap_relative = h_abs > 0.0 ? rep.identity15_gap / h_abs : 0.0;
  rep.max_principle_violation = mp;
  return rep;
}

}  // namespace bubblering::stream
