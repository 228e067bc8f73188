#pragma once

/// \file cross_section.hpp
/// Meridional cross-sections of an axisymmetric ring.
///
/// Coordinates are (r, z): r is the distance to the symmetry axis, z the
/// axial coordinate. Every cross-section is closed, convex, symmetric under
/// z -> -z and strictly separated from the axis; the constructor enforces
/// this and throws ShapeError naming the violated invariant.
///
/// Smooth kinds are parameterized by t in [0, 2pi), counter-clockwise in the
/// (r, z) plane, so the outward normal is (z'(t), -r'(t)) / |x'(t)|.

#include <string>
#include <variant>
#include <vector>

namespace bubblering::geometry {

struct Point {
  double r = 0.0;
  double z = 0.0;
};

/// {(r - center_r)^2 / semi_r^2 + z^2 / semi_z^2 <= 1}
struct Ellipse {
  double center_r = 0.0;
  double semi_r = 0.0;
  double semi_z = 0.0;
};

struct Disk {
  double center_r = 0.0;
  double radius = 0.0;
};

/// Polar graph about (center_r, 0):
///   rho(theta) = base_radius + sum_k cosine_coeffs[k-1] cos(k theta),
/// k = 1, 2, ... Cosine-only modes keep the curve symmetric in z.
struct FourierStar {
  double center_r = 0.0;
  double base_radius = 0.0;
  std::vector<double> cosine_coeffs;
};

/// Vertices in either orientation; stored counter-clockwise.
struct Polygon {
  std::vector<Point> vertices;
};

using ShapeKind = std::variant<Ellipse, Disk, FourierStar, Polygon>;

/// Position and first two parameter derivatives of a smooth boundary.
struct CurveSample {
  Point x;
  Point dx;
  Point ddx;
};

inline constexpr int kDefaultResolution = 512;
inline constexpr int kMaxResolution = 8192;

class CrossSection {
 public:
  explicit CrossSection(ShapeKind kind, int resolution = kDefaultResolution);

  const ShapeKind& kind() const noexcept { return kind_; }
  int resolution() const noexcept { return resolution_; }
  bool is_smooth() const noexcept;
  std::string kind_name() const;

  /// Minor-radius scale sqrt(area / 2pi), fixed at construction.
  double length_scale() const noexcept { return length_scale_; }

  /// Smooth kinds only; throws UnsupportedShapeError for polygons.
  CurveSample sample(double t) const;

  /// Counter-clockwise vertices; polygons only.
  const std::vector<Point>& vertices() const;

  CrossSection with_resolution(int resolution) const;
  /// Dilation about the origin of the (r, z) plane.
  CrossSection scaled(double factor) const;

 private:
  void validate();

  ShapeKind kind_;
  int resolution_;
  double length_scale_ = 0.0;
};

/// Signed curvature of a smooth sample; positive on convex curves.
double signed_curvature(const CurveSample& s);

}  // namespace bubblering::geometry
