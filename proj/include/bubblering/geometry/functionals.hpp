#pragma once

/// \file functionals.hpp
/// Scalar functionals and inequalities of a ring cross-section.
///
/// Area, first radial moment and the inverse-square integral are all reduced
/// to boundary integrals with the divergence theorem:
///   |E|        = oint r n_r ds
///   int_E r    = oint (r^2 / 2) n_r ds
///   int_E r^-2 = oint (-1/r) n_r ds
/// Smooth kinds use the periodic trapezoidal rule (spectrally accurate);
/// polygons use exact per-edge antiderivatives.

#include <vector>

#include "bubblering/geometry/cross_section.hpp"

namespace bubblering::geometry {

/// Boundary sample. For smooth kinds one entry per quadrature node; for
/// polygons one entry per edge (midpoint, edge normal, edge length) and
/// `curvature`/`speed` are empty while `turning_angle[i]` is the exterior
/// angle at vertex i.
struct BoundaryNodes {
  bool smooth = true;
  std::vector<Point> position;
  std::vector<Point> normal;
  std::vector<double> weight;
  std::vector<double> curvature;
  std::vector<double> speed;
  std::vector<double> turning_angle;

  std::size_t size() const noexcept { return position.size(); }
  double perimeter() const;
  double total_curvature() const;
};

BoundaryNodes boundary_nodes(const CrossSection& shape);

struct GeometryReport {
  double area = 0.0;
  double major_radius = 0.0;        // R, centroid radius
  double minor_radius = 0.0;        // a = sqrt(area / 2pi)
  double mu = 0.0;                  // R / a
  double mu_sqrt_area = 0.0;        // R / sqrt(area)
  double inverse_square_integral = 0.0;  // int_E r^-2
  double delta = 0.0;               // inverse_square_integral - 2pi
  double total_curvature = 0.0;     // oint kappa ds
  double total_mean_curvature = 0.0;  // oint H ds
  double r_max = 0.0;
  double r_min = 0.0;
  double height_h = 0.0;
  double perimeter = 0.0;
  bool is_thick = false;
  int resolution = 0;
  /// |I_N - I_{N/2}| for the inverse-square integral; 0 for polygons.
  double quadrature_error = 0.0;
};

/// Smooth kinds refine the resolution (doubling from shape.resolution())
/// until two successive inverse-square integrals agree to 1e-9 relative, up
/// to kMaxResolution; throws QuadratureError if the last estimate still
/// exceeds 1e-8 relative.
GeometryReport geometry_report(const CrossSection& shape);

/// Same functionals at exactly the shape's resolution, no refinement.
GeometryReport geometry_report_fixed(const CrossSection& shape);

struct Extents {
  double r_min = 0.0;
  double r_max = 0.0;
  double height = 0.0;  // max z
};
Extents extents(const CrossSection& shape);

struct WidthProfile {
  std::vector<double> z;
  std::vector<double> width;  // R_max(z) - R_min(z)
  double height = 0.0;        // h
  double delta_r = 0.0;       // r_max - r_min
};

/// Width sampled on `levels` equispaced heights in [-h, h]
/// (default: resolution / 2 + 1).
WidthProfile width_height(const CrossSection& shape, int levels = 0);

/// Length of S(b) = {x on the boundary : n(x) . e_r > b}.
double surface_set_length(const CrossSection& shape, double b);

/// r_max / R; bounded by 3 for every compact convex set.
double lemma3_ratio(const CrossSection& shape);

/// The certificate's choice of b: pi/(36 R^2) when R >= sqrt(pi/18), else 1/2.
/// Both guarantee |S(b)| >= pi/(3R) on normalized shapes.
double certificate_b_choice(double major_radius);

/// Whether (2 pi R^2 <= |E|) implies (delta >= -tol) on this shape. Must be
/// true for every valid shape.
bool corollary_implication_check(const CrossSection& shape, double tol = 1e-10);

struct PhysicalParams {
  double rho = 1.0;    // mass density
  double sigma = 1.0;  // surface tension coefficient
  double beta = 1.0;   // circulation
};

/// We = sqrt(2pi) rho beta^2 / (sigma sqrt(area)).
double weber_number(const PhysicalParams& params, double area);

struct Normalized {
  CrossSection shape;
  double scale_a = 1.0;       // a of the input shape
  double w_factor = 1.0;      // W_hat = W * w_factor, a / beta
  double gamma_factor = 1.0;  // gamma_hat = gamma * gamma_factor, 1 / (a beta)
  double lambda_factor = 1.0; // lambda_hat = lambda * lambda_factor, a / sigma
};

/// Rescale to area 2pi (a = 1).
Normalized normalize(const CrossSection& shape,
                     const PhysicalParams& params = {});

/// Closed forms for the ellipse {(r-R0)^2/m^2 + z^2/n^2 <= 1}.
double ellipse_inverse_square_integral(double center_r, double semi_r,
                                       double semi_z);
double disk_delta(double center_r, double radius);
/// delta >= 0 for the ellipse, i.e. m/n + 1 <= R0 / sqrt(R0^2 - m^2).
bool ellipse_thickness_predicate(double center_r, double semi_r, double semi_z);

}  // namespace bubblering::geometry
