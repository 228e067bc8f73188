#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bubblering {

/// A cross-section violates one of its invariants. `invariant()` names it
/// (e.g. "convex", "axis-clearance", "z-symmetry").
class ShapeError : public std::invalid_argument {
 public:
  ShapeError(std::string invariant, const std::string& detail)
      : std::invalid_argument(invariant + ": " + detail),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// The operation needs pointwise curvature, which polygons do not have.
class UnsupportedShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bubblering
