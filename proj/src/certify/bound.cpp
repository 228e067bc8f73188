#include "bubblering/certify/bound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bubblering::certify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_normalized(double area) {
  if (!(std::abs(area - kTwoPi) <= kAreaTolerance * kTwoPi)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "explicit_bound: shape is not normalized (area " << area
        << ", expected 2pi); call geometry::normalize first";
    throw std::invalid_argument(msg.str());
  }
}

double b_star(double R) {
  return R >= branch_radius() ? kPi / (36.0 * R * R) : 0.5;
}

BoundCertificate headline(const geometry::GeometryReport& report) {
  require_normalized(report.area);
  BoundCertificate c;
  c.mu = report.major_radius / report.minor_radius;
  c.mu_sqrt_area = report.major_radius / std::sqrt(report.area);
  c.delta = report.delta;
  c.is_thick = report.is_thick;
  c.branch = report.major_radius >= branch_radius() ? Branch::LargeRadius
                                                    : Branch::SmallRadius;
  c.universal = universal_bound(report.major_radius, report.delta);
  c.measured = c.universal;
  c.term_curvature = c.universal.term_curvature;
  c.term_bernoulli = c.universal.term_bernoulli;
  c.we_min = c.universal.we_min;
  return c;
}

}  // namespace

double branch_radius() { return std::sqrt(kPi / 18.0); }

double form_constant() { return kPi * kPi * kPi / 486.0; }

const char* to_string(Branch b) {
  return b == Branch::LargeRadius ? "R >= sqrt(pi/18), b* = pi/(36 R^2)"
                                  : "R < sqrt(pi/18), b* = 1/2";
}

const char* to_string(Verdict v) {
  return v == Verdict::RuledOut ? "RuledOut" : "NotRuledOut";
}

BoundTerms universal_bound(double R, double delta) {
  if (!(R > 0.0)) throw std::invalid_argument("universal_bound: R must be positive");
  BoundTerms t;
  t.b_star = b_star(R);
  t.r_max = 3.0 * R;
  t.surface_length = kPi / (3.0 * R);
  t.term_curvature = 2.0 * t.b_star / t.r_max * t.surface_length * t.surface_length;
  t.term_bernoulli = 4.0 * std::max(delta, 0.0) * kPi * kPi /
                     (3.0 * R * (4.0 * kPi + 18.0 * R * R));
  t.we_min = t.term_curvature + t.term_bernoulli;
  return t;
}

BoundCertificate explicit_bound(const geometry::GeometryReport& report) {
  return headline(report);
}

BoundCertificate explicit_bound(const geometry::CrossSection& shape) {
  const geometry::GeometryReport report = geometry::geometry_report(shape);
  BoundCertificate c = headline(report);
  BoundTerms& m = c.measured;
  m.b_star = c.universal.b_star;
  m.r_max = report.r_max;
  m.surface_length = geometry::surface_set_length(shape, m.b_star);
  m.height = report.height_h;
  m.perimeter = report.perimeter;
  m.term_curvature = 2.0 * m.b_star / m.r_max * m.surface_length * m.surface_length;
  m.term_bernoulli =
      4.0 * std::max(report.delta, 0.0) * m.height * m.height / m.perimeter;
  m.we_min = m.term_curvature + m.term_bernoulli;
  c.has_measured = true;
  return c;
}

Verdict verdict(const BoundCertificate& cert, double we, bool is_thick,
                Variant variant) {
  if (!(we > 0.0)) throw std::invalid_argument("verdict: We must be positive");
  return is_thick && we < cert.we_min_for(variant) ? Verdict::RuledOut
                                                   : Verdict::NotRuledOut;
}

std::vector<NorburyRow> norbury_scaling_probe(
    const std::vector<double>& eps_over_r0, double R0) {
  if (!(R0 > 0.0)) throw std::invalid_argument("norbury_scaling_probe: R0 must be positive");
  std::vector<NorburyRow> rows;
  for (double e : eps_over_r0) {
    if (!(e > 0.0 && e < 1.0)) {
      throw std::invalid_argument("norbury_scaling_probe: eps/R0 must lie in (0, 1)");
    }
    const double rho = R0 * (1.0 - e);
    const geometry::CrossSection disk(geometry::Disk{R0, rho});
    const geometry::CrossSection normalized = geometry::normalize(disk).shape;
    const BoundCertificate cert = explicit_bound(normalized);
    NorburyRow row;
    row.eps_over_r0 = e;
    row.delta = geometry::disk_delta(R0, rho);
    row.delta_report = cert.delta;
    row.delta_scaled = row.delta * std::sqrt(e);
    row.mu = cert.mu;
    row.we_min = cert.we_min;
    row.we_min_measured = cert.measured.we_min;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bubblering::certify
