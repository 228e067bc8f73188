#pragma once

/// \file kernel.hpp
/// Green's function of -div((1/r) grad psi) in the meridional half-plane:
///
///   G(x, y) = sqrt(r_x r_y) / (2 pi) * [(2/k - k) K(k) - (2/k) E(k)],
///   k^2     = 4 r_x r_y / ((r_x + r_y)^2 + (z_x - z_y)^2).
///
/// G is the stream function of a unit-circulation vortex filament at y. It
/// vanishes on the axis, decays like (r_x r_y)^2 / (4 |x - y|^3) far away and
/// is logarithmically singular at x = y:
///
///   G = A(x, y) ln(1/k') + B(x, y),   A, B smooth,  A(x, x) = r / (2 pi),
///
/// where k'^2 = |x - y|^2 / ((r_x + r_y)^2 + (z_x - z_y)^2). The Nystrom
/// solver integrates the ln(1/k') part with product weights, so KernelTerms
/// exposes A and its normal derivative alongside G.

#include "bubblering/geometry/cross_section.hpp"

namespace bubblering::stream {

using geometry::Point;

double ring_kernel(Point source, Point target);

/// Gradient of G with respect to the target point.
Point ring_kernel_gradient(Point source, Point target);

/// strength * G(ring, eval): exact exterior stream function of a filament.
double filament_stream(Point ring, double strength, Point eval);
Point filament_stream_gradient(Point ring, double strength, Point eval);

/// Everything the boundary operators need for one (target, source) pair.
/// Normal derivatives act on the target with unit normal `target_normal`.
struct KernelTerms {
  double g = 0.0;         // G
  double log_coeff = 0.0; // A, coefficient of ln(1/k')
  double dn_g = 0.0;      // n . grad_x G
  double dn_log_coeff = 0.0;  // n . grad_x A
};

KernelTerms kernel_terms(Point source, Point target, Point target_normal);

}  // namespace bubblering::stream
