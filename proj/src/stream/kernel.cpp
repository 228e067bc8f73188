#include "bubblering/stream/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bubblering/specialfn/elliptic.hpp"

namespace bubblering::stream {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// ln(1/k') coefficient switches to its series below this complementary
// parameter, where the closed form in K(k'), E(k') would lose digits to
// (K - E)/k'^2.
constexpr double kSmallParam = 0.25;

struct Geometry {
  double m;   // k^2
  double mc;  // k'^2 = |x - y|^2 / D
  double k;
  double D;
};

Geometry pair_geometry(Point s, Point t) {
  if (!(s.r > 0.0) || !(t.r > 0.0)) {
    throw std::invalid_argument("ring_kernel: points must have r > 0");
  }
  const double dr = t.r - s.r;
  const double dz = t.z - s.z;
  const double rho2 = dr * dr + dz * dz;
  if (rho2 == 0.0) {
    throw std::invalid_argument(
        "ring_kernel: coincident points (log-singular; use the boundary "
        "quadrature)");
  }
  const double sum = t.r + s.r;
  const double D = sum * sum + dz * dz;
  const double m = 4.0 * t.r * s.r / D;
  return {m, rho2 / D, std::sqrt(m), D};
}

}  // namespace

double ring_kernel(Point source, Point target) {
  if (target.r == 0.0 && source.r > 0.0) return 0.0;
  const Geometry g = pair_geometry(source, target);
  const auto br = specialfn::ring_bracket(g.m, g.mc);
  return std::sqrt(source.r * target.r) / kTwoPi * br.value;
}

Point ring_kernel_gradient(Point source, Point target) {
  const KernelTerms r = kernel_terms(source, target, {1.0, 0.0});
  const KernelTerms z = kernel_terms(source, target, {0.0, 1.0});
  return {r.dn_g, z.dn_g};
}

double filament_stream(Point ring, double strength, Point eval) {
  return strength * ring_kernel(ring, eval);
}

Point filament_stream_gradient(Point ring, double strength, Point eval) {
  const Point g = ring_kernel_gradient(ring, eval);
  return {strength * g.r, strength * g.z};
}

KernelTerms kernel_terms(Point source, Point target, Point target_normal) {
  const Geometry g = pair_geometry(source, target);
  const double rs = source.r;
  const double rt = target.r;
  const double sq = std::sqrt(rs * rt);
  const double half_ratio = 0.5 * std::sqrt(rs / rt);  // d sqrt(rs rt) / d rt

  const auto br = specialfn::ring_bracket(g.m, g.mc);
  // Complementary integrals K(k'), E(k') carry the ln(1/k') coefficient:
  //   L(k) = (2/pi) [(2/k) E(k') - k K(k')],  A = sqrt(rs rt) L / (2 pi).
  const auto comp = specialfn::complete_elliptic_param(g.mc, g.m);
  const double dk_over = g.mc < kSmallParam
                             ? specialfn::k_minus_e_over_m(g.mc, g.m)
                             : (comp.K - comp.E) / g.mc;
  const double L = 2.0 / kPi * (2.0 / g.k * comp.E - g.k * comp.K);
  const double dL = 2.0 / kPi * (dk_over - 2.0 * comp.E / g.m);

  // Target gradient of k: d(k^2)/dr = 4 rs [(rs^2 - rt^2) + dz^2] / D^2,
  // d(k^2)/dz = -8 rs rt dz / D^2.
  const double dz = target.z - source.z;
  const double D2 = g.D * g.D;
  const double dk_dr =
      4.0 * rs * ((rs - rt) * (rs + rt) + dz * dz) / D2 / (2.0 * g.k);
  const double dk_dz = -8.0 * rs * rt * dz / D2 / (2.0 * g.k);
  const double dk_dn = dk_dr * target_normal.r + dk_dz * target_normal.z;

  KernelTerms out;
  out.g = sq / kTwoPi * br.value;
  out.log_coeff = sq / kTwoPi * L;
  out.dn_g = (half_ratio * br.value * target_normal.r +
              sq * br.derivative * dk_dn) /
             kTwoPi;
  out.dn_log_coeff =
      (half_ratio * L * target_normal.r + sq * dL * dk_dn) / kTwoPi;
  return out;
}

}  // namespace bubblering::stream
