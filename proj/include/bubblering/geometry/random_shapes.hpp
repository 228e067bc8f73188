#pragma once

/// \file random_shapes.hpp
/// Deterministic generators of valid cross-sections for property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "bubblering/geometry/cross_section.hpp"

namespace bubblering::geometry {

class ShapeSampler {
 public:
  explicit ShapeSampler(std::uint64_t seed) : rng_(seed) {}

  /// Ellipse with gap-to-axis between 2% and 300% of its r semi-axis.
  CrossSection ellipse();
  CrossSection disk();
  /// Convex Fourier star with 2-5 cosine modes (rejection sampled).
  CrossSection fourier_star();
  /// Uniform choice among the three smooth kinds.
  CrossSection smooth();
  /// Convex hull of a z-symmetric star of points on a symmetric angle grid,
  /// shifted right until r_min exceeds 0.1 a.
  CrossSection polygon();

 private:
  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);

  std::mt19937_64 rng_;
};

/// Triangle with vertices (eps, -half_height), (eps, half_height),
/// (apex_r, 0): r_max / R -> 3 as eps -> 0.
CrossSection axis_triangle(double eps, double half_height, double apex_r);

/// Counter-clockwise convex hull (monotone chain, collinear points dropped).
std::vector<Point> convex_hull(std::vector<Point> points);

}  // namespace bubblering::geometry
