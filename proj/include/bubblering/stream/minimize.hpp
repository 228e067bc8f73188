#pragma once

/// \file minimize.hpp
/// Derivative-free search for the smallest dynamic-condition residual over a
/// finite-dimensional family of normalized cross-sections (area 2pi).
///
/// The outer loop is Nelder-Mead over the shape parameters. For each shape
/// the remaining unknowns are eliminated exactly: the Dirichlet solution is
/// affine in W (one factorization, two right-hand sides), the optimal
/// lambda >= 0 for fixed W is the clipped boundary mean of We q^2 - 2H, and
/// W itself is found by a bracketing scan followed by Brent's method.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bubblering/stream/residual.hpp"

namespace bubblering::stream {

enum class FamilyKind { ThickDisk, Ellipse, FourierStar };

/// Parameter vectors:
///   ThickDisk:   {R0}                radius sqrt(2), thick iff R0 < sqrt(8/3)
///   Ellipse:     {R0, s}             semi-axes sqrt(2) e^{s/2}, sqrt(2) e^{-s/2}
///   FourierStar: {R0, c1, ..., cK}   base radius 1, rescaled to area 2pi
struct ShapeFamily {
  FamilyKind kind = FamilyKind::ThickDisk;
  std::vector<double> initial;
  int resolution = 128;
  /// Candidates with delta < 0 are inadmissible.
  bool require_thick = false;

  std::string name() const;
  std::vector<std::string> parameter_names() const;
  /// Throws ShapeError when the parameters leave the admissible region.
  CrossSection build(std::span<const double> params) const;
};

ShapeFamily thick_disk_family(double R0 = 1.5, int resolution = 128);
ShapeFamily ellipse_family(double R0, double log_aspect, int resolution = 128);
ShapeFamily fourier_star_family(double R0, std::vector<double> coeffs,
                                int resolution = 128);

/// Best (W, lambda) for one shape and the report at that optimum.
struct ShapeEvaluation {
  double W = 0.0;
  double lambda = 0.0;
  ResidualReport report;
  double circulation_error = 0.0;
};
ShapeEvaluation evaluate_shape(const CrossSection& shape, double we);

struct EvaluationRecord {
  std::vector<double> params;
  bool admissible = false;
  double objective = 0.0;  // dyn_residual_l2, or the penalty
  double W = 0.0;
  double lambda = 0.0;
  double dyn_residual_l2 = 0.0;
  double dyn_residual_max = 0.0;
  double identity15_gap = 0.0;
  double max_principle_violation = 0.0;
  std::string note;  // reason for inadmissibility
};

struct SearchResult {
  ShapeFamily family;
  double we = 0.0;
  int budget = 0;
  std::uint64_t seed = 0;
  std::vector<double> best_params;
  std::optional<CrossSection> best_shape;
  double W = 0.0;
  double lambda = 0.0;
  ResidualReport report;
  std::vector<EvaluationRecord> log;
};

/// Objective value assigned to inadmissible parameters (plus a distance
/// term that pulls the simplex back).
inline constexpr double kPenalty = 1e6;

/// Throws std::invalid_argument for budget < 1, we <= 0 or an inadmissible
/// starting point.
SearchResult residual_minimize(const ShapeFamily& family, double we,
                               int budget, std::uint64_t seed);

/// One CSV row per evaluation: parameters, W, lambda, residual norms.
std::string evaluation_log_csv(const SearchResult& result);

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead with standard coefficients (1, 2, 1/2, 1/2). Stops after
/// `budget` evaluations or when the simplex has collapsed below `xtol` with
/// values spread below `ftol`.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const std::vector<double>& steps, int budget,
    double xtol = 1e-10, double ftol = 1e-15);

}  // namespace bubblering::stream
