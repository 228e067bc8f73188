#pragma once

/// \file bound.hpp
/// Explicit lower bound on the Weber number of a thick ring, in normalized
/// units (|E| = 2pi, beta = 1, so R = mu).
///
///   We >= u^2 + v^2,
///   u = sqrt(2 b / R_max) |S(b)|          >= sqrt(2 b / (3R)) pi / (3R),
///   v^2 = 4 lambda h^2 >= 4 delta h^2 / |dE| >= 4 delta pi^2 / (3R (4pi + 18 R^2)),
///
/// with b = pi / (36 R^2) for R >= sqrt(pi/18) and b = 1/2 below. The
/// "universal" variant uses only R and delta; the "measured" variant keeps
/// R_max, |S(b)|, h and |dE| of the actual shape and is never smaller.
/// docs/bound_derivation.md walks through each inequality.

#include <vector>

#include "bubblering/geometry/cross_section.hpp"
#include "bubblering/geometry/functionals.hpp"

namespace bubblering::certify {

/// Relative tolerance on |E| = 2pi for normalized input.
inline constexpr double kAreaTolerance = 1e-10;

/// R where the two choices of b meet: sqrt(pi / 18).
double branch_radius();

/// c in We >= c / (mu + mu^3) (1/mu^2 + delta): pi^3 / 486.
double form_constant();

enum class Branch { LargeRadius, SmallRadius };
enum class Verdict { RuledOut, NotRuledOut };
enum class Variant { Universal, Measured };

const char* to_string(Branch b);
const char* to_string(Verdict v);

struct BoundTerms {
  double b_star = 0.0;
  double r_max = 0.0;           // R_max used for u (3R when universal)
  double surface_length = 0.0;  // |S(b*)| used for u (pi/(3R) when universal)
  double height = 0.0;          // h used for v (measured only)
  double perimeter = 0.0;       // |dE| used for v (measured only)
  double term_curvature = 0.0;  // u^2
  double term_bernoulli = 0.0;  // v^2
  double we_min = 0.0;          // u^2 + v^2
};

struct BoundCertificate {
  double mu = 0.0;            // R / a (= R, normalized)
  double mu_sqrt_area = 0.0;  // R / sqrt|E| = mu / sqrt(2pi)
  double delta = 0.0;
  bool is_thick = false;
  Branch branch = Branch::LargeRadius;
  BoundTerms universal;
  BoundTerms measured;
  bool has_measured = false;

  // Universal values, the headline numbers.
  double term_curvature = 0.0;
  double term_bernoulli = 0.0;
  double we_min = 0.0;

  double we_min_for(Variant v) const {
    return v == Variant::Measured && has_measured ? measured.we_min : we_min;
  }
};

/// Shape-free bound from R and delta. Negative delta contributes nothing
/// (only lambda >= 0 is known then).
BoundTerms universal_bound(double major_radius, double delta);

/// Universal certificate from a report of a normalized shape. Throws
/// std::invalid_argument if the area differs from 2pi beyond kAreaTolerance.
BoundCertificate explicit_bound(const geometry::GeometryReport& report);

/// Universal and measured certificate of a normalized shape.
BoundCertificate explicit_bound(const geometry::CrossSection& normalized_shape);

/// RuledOut iff is_thick and we < we_min of the chosen variant. Throws
/// std::invalid_argument for we <= 0.
Verdict verdict(const BoundCertificate& cert, double we, bool is_thick,
                Variant variant = Variant::Universal);

struct NorburyRow {
  double eps_over_r0 = 0.0;
  double delta = 0.0;          // closed form
  double delta_report = 0.0;   // boundary quadrature of the normalized disk
  double delta_scaled = 0.0;   // delta sqrt(eps / R0), tends to pi sqrt 2
  double mu = 0.0;
  double we_min = 0.0;
  double we_min_measured = 0.0;
};

/// Disks of radius R0 - eps about R0 (normalized), one row per eps/R0.
/// Throws std::invalid_argument unless every eps/R0 lies in (0, 1).
std::vector<NorburyRow> norbury_scaling_probe(
    const std::vector<double>& eps_over_r0, double R0 = 1.0);

}  // namespace bubblering::certify
