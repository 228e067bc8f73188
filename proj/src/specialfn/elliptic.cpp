#include "bubblering/specialfn/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bubblering::specialfn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Below this complementary parameter E comes from the log expansion.
constexpr double kComplementarySeriesCutoff = 0.05;
// Below this parameter the ring bracket and (K-E)/m use power series.
constexpr double kSmallParamCutoff = 0.25;
constexpr int kMaxTerms = 200;

// E(k) = 1 + 1/2 sum_j c_j mc^{j+1} (ln(1/k') + d(j) - 1/((2j+1)(2j+2))),
// c_j = (1/2)_j (3/2)_j / ((2)_j j!), d(j) = psi(1+j) - psi(1/2+j).
double second_kind_near_one(double mc) {
  const double log_inv_kp = -0.5 * std::log(mc);
  double coeff = 1.0;
  double d = std::log(4.0);
  double power = mc;
  double sum = 0.0;
  for (int j = 0; j < kMaxTerms; ++j) {
    const double jj = j;
    const double term =
        coeff * power *
        (log_inv_kp + d - 1.0 / ((2.0 * jj + 1.0) * (2.0 * jj + 2.0)));
    sum += term;
    if (std::abs(term) <= kEps * std::abs(sum) * 0.25) break;
    coeff *= (0.5 + jj) * (1.5 + jj) / ((2.0 + jj) * (1.0 + jj));
    d += 1.0 / (jj + 1.0) - 2.0 / (2.0 * jj + 1.0);
    power *= mc;
  }
  return 1.0 + 0.5 * sum;
}

void check_param(double m, double mc) {
  if (!(m >= 0.0) || !(mc > 0.0) || m > 1.0 || mc > 1.0 ||
      std::abs(m + mc - 1.0) > 64.0 * kEps) {
    throw std::domain_error("complete_elliptic: parameter pair (" +
                            std::to_string(m) + ", " + std::to_string(mc) +
                            ") outside [0,1) or inconsistent");
  }
}

}  // namespace

EllipticPair complete_elliptic_param(double m, double mc) {
  check_param(m, mc);
  // AGM with a0 = 1, b0 = k', c0 = k. E = K (1 - sum_n 2^{n-1} c_n^2).
  double a = 1.0;
  double b = std::sqrt(mc);
  double weight = 0.5;
  double sum = 0.5 * m;
  for (int it = 0; it < 64; ++it) {
    const double c = 0.5 * (a - b);
    const double a_next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = a_next;
    weight *= 2.0;
    sum += weight * c * c;
    if (std::abs(a - b) <= kEps * a) break;
  }
  EllipticPair out;
  out.k = std::sqrt(m);
  out.K = kPi / (2.0 * a);
  out.E = mc < kComplementarySeriesCutoff ? second_kind_near_one(mc)
                                          : out.K * (1.0 - sum);
  return out;
}

EllipticPair complete_elliptic(double k) {
  if (!(k >= 0.0) || !(k < 1.0)) {
    throw std::domain_error("complete_elliptic: modulus " + std::to_string(k) +
                            " outside [0, 1)");
  }
  // (1-k)(1+k) keeps the complement exact to rounding near k = 1.
  return complete_elliptic_param(k * k, (1.0 - k) * (1.0 + k));
}

double k_minus_e_over_m(double m, double mc) {
  check_param(m, mc);
  if (m < kSmallParamCutoff) {
    // (pi/2) sum_{n>=1} a_n 2n/(2n-1) m^{n-1}, a_n = ((1/2)_n / n!)^2.
    double a_n = 0.25;
    double power = 1.0;
    double sum = 0.0;
    for (int n = 1; n < kMaxTerms; ++n) {
      const double nn = n;
      const double term = a_n * (2.0 * nn / (2.0 * nn - 1.0)) * power;
      sum += term;
      if (term <= kEps * sum * 0.25) break;
      a_n *= ((2.0 * nn + 1.0) / (2.0 * nn + 2.0)) *
             ((2.0 * nn + 1.0) / (2.0 * nn + 2.0));
      power *= m;
    }
    return 0.5 * kPi * sum;
  }
  const auto ke = complete_elliptic_param(m, mc);
  return (ke.K - ke.E) / m;
}

RingBracket ring_bracket(double m, double mc) {
  check_param(m, mc);
  RingBracket out;
  const double k = std::sqrt(m);
  if (m < kSmallParamCutoff) {
    // Q = (pi/2) sum_{n>=2} a_{n-1} (n-1)/n k^{2n-1}.
    double a_prev = 0.25;  // a_1
    double even_power = m;  // k^{2n-2}
    double q = 0.0;
    double dq = 0.0;
    for (int n = 2; n < kMaxTerms; ++n) {
      const double nn = n;
      const double c = a_prev * (nn - 1.0) / nn;
      const double term = c * even_power * k;
      q += term;
      dq += c * (2.0 * nn - 1.0) * even_power;
      if (term <= kEps * q * 0.25) break;
      a_prev *= ((2.0 * nn - 1.0) / (2.0 * nn)) * ((2.0 * nn - 1.0) / (2.0 * nn));
      even_power *= m;
    }
    out.value = 0.5 * kPi * q;
    out.derivative = 0.5 * kPi * dq;
    return out;
  }
  const auto ke = complete_elliptic_param(m, mc);
  out.value = ((2.0 - m) * ke.K - 2.0 * ke.E) / k;
  out.derivative = ((2.0 - m) * ke.E / mc - 2.0 * ke.K) / m;
  return out;
}

}  // namespace bubblering::specialfn
