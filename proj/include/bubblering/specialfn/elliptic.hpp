#pragma once

/// \file elliptic.hpp
/// Complete elliptic integrals of the first and second kind.
///
/// K(k) and E(k) are computed by the arithmetic-geometric mean. Near k = 1
/// the second-kind integral suffers cancellation in the AGM sum, so E is
/// taken from the logarithmic expansion in the complementary modulus k'
/// instead (DLMF 19.12.1). Every entry point that is used close to k = 1
/// accepts the complementary parameter 1 - k^2 explicitly so that callers
/// which know it to full relative precision (the ring kernel does) never
/// have to round k itself.

namespace bubblering::specialfn {

struct EllipticPair {
  double k = 0.0;  ///< modulus
  double K = 0.0;  ///< first kind
  double E = 0.0;  ///< second kind
};

/// K and E for modulus k in [0, 1). Throws std::domain_error otherwise.
EllipticPair complete_elliptic(double k);

/// K and E for parameter m = k^2, given together with its complement
/// mc = 1 - m. Both must be in [0, 1] and mc must be positive.
EllipticPair complete_elliptic_param(double m, double mc);

/// (K(k) - E(k)) / k^2 as a function of the parameter m = k^2; finite at m = 0
/// where it equals pi/4.
double k_minus_e_over_m(double m, double mc);

/// Q(k) = (2/k - k) K(k) - (2/k) E(k), the bracket of the axisymmetric ring
/// kernel, and its derivative dQ/dk. Small k uses the power series, which
/// avoids the k^3 cancellation of the closed form.
struct RingBracket {
  double value = 0.0;
  double derivative = 0.0;
};
RingBracket ring_bracket(double m, double mc);

}  // namespace bubblering::specialfn
