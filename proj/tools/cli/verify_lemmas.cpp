// Property suites behind `bubblering verify-lemmas`. Each suite draws its
// corpus from a generator seeded with (seed + suite index), so reports are
// reproducible and suites are independent of each other's draw counts.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bubblering/certify/bound.hpp"
#include "bubblering/geometry/functionals.hpp"
#include "bubblering/geometry/random_shapes.hpp"
#include "bubblering/specialfn/elliptic.hpp"
#include "run.hpp"

namespace bubblering::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Tracker {
  SuiteResult r;
  Tracker(std::string name, std::string measure, double tol) {
    r.name = std::move(name);
    r.measure = std::move(measure);
    r.tolerance = tol;
    r.worst = r.measure == "max_error" ? 0.0 : INFINITY;
  }
  void error(double e) {
    ++r.count;
    r.worst = std::max(r.worst, e);
    if (!(e <= r.tolerance)) ++r.failures;
  }
  // Margin of an inequality lhs <= rhs; fails below -tolerance.
  void margin(double m) {
    ++r.count;
    r.worst = std::min(r.worst, m);
    if (!(m >= -r.tolerance)) ++r.failures;
  }
};

geometry::CrossSection random_ellipse(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.2, 2.0), g(0.02, 3.0);
  const double m = u(rng), n = u(rng);
  return geometry::CrossSection(geometry::Ellipse{m * (1.0 + g(rng)), m, n});
}

}  // namespace

std::vector<SuiteResult> verify_lemmas(std::uint64_t seed, int count) {
  std::vector<SuiteResult> out;

  {
    Tracker t("legendre-relation", "max_error", 1e-12);
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> dist(0.0, 0.999);
    for (int i = 0; i < count; ++i) {
      const double k = dist(rng);
      const auto p = specialfn::complete_elliptic(k);
      const auto c = specialfn::complete_elliptic(std::sqrt((1 - k) * (1 + k)));
      t.error(std::abs(p.E * c.K + c.E * p.K - p.K * c.K - kPi / 2) / (kPi / 2));
    }
    out.push_back(t.r);
  }
  {
    Tracker t("ellipse-closed-form", "max_error", 1e-10);
    std::mt19937_64 rng(seed + 2);
    for (int i = 0; i < count; ++i) {
      const auto s = random_ellipse(rng);
      const auto& e = std::get<geometry::Ellipse>(s.kind());
      const double exact =
          geometry::ellipse_inverse_square_integral(e.center_r, e.semi_r, e.semi_z);
      t.error(std::abs(geometry::geometry_report(s).inverse_square_integral - exact) / exact);
    }
    out.push_back(t.r);
  }
  {
    Tracker hd("mean-curvature-identity", "max_error", 1e-8);
    Tracker gb("gauss-bonnet-smooth", "max_error", 1e-8);
    geometry::ShapeSampler sampler(seed + 3);
    for (int i = 0; i < count; ++i) {
      const auto rep = geometry::geometry_report(sampler.smooth());
      hd.error(std::abs(rep.total_mean_curvature + rep.delta));
      gb.error(std::abs(rep.total_curvature - kTwoPi));
    }
    out.push_back(hd.r);
    out.push_back(gb.r);
  }
  {
    Tracker gb("gauss-bonnet-polygon", "max_error", 1e-12);
    Tracker l3("width-ratio", "min_margin", 1e-10);
    geometry::ShapeSampler sampler(seed + 4);
    for (int i = 0; i < count; ++i) {
      const auto s = sampler.polygon();
      gb.error(std::abs(geometry::boundary_nodes(s).total_curvature() - kTwoPi));
      l3.margin(3.0 - geometry::lemma3_ratio(s));
    }
    out.push_back(gb.r);
    out.push_back(l3.r);
  }
  {
    Tracker t("width-ratio-sharpness", "max_error", 1e-12);
    for (double eps : {1e-14, 1e-15}) {
      t.error(std::abs(geometry::lemma3_ratio(geometry::axis_triangle(eps, 1.0, 2.0)) - 3.0));
    }
    out.push_back(t.r);
  }
  {
    Tracker height("height-bound", "min_margin", 1e-12);
    Tracker upper("surface-upper-bound", "min_margin", 1e-12);
    Tracker lower("surface-lower-bound", "min_margin", 1e-12);
    Tracker area("height-width-area", "min_margin", 1e-12);
    Tracker width("width-bound", "min_margin", 1e-12);
    geometry::ShapeSampler sampler(seed + 5);
    int i = 0;
    while (height.r.count < count) {
      const auto raw = (i++ % 3 == 2) ? sampler.polygon() : sampler.smooth();
      const auto s = geometry::normalize(raw).shape;
      const auto rep = geometry::geometry_report(s);
      const double R = rep.major_radius, h = rep.height_h;
      const double dR = rep.r_max - rep.r_min;
      const double b = certify::universal_bound(R, rep.delta).b_star;
      height.margin((2 * h - 2 * kPi / (3 * R)) / (2 * h));
      const double s0 = geometry::surface_set_length(s, 0.0);
      upper.margin((2 * h + 6 * R - s0) / s0);
      lower.margin(geometry::surface_set_length(s, b) * 3 * R / kPi - 1.0);
      area.margin(h * dR / kPi - 1.0);
      width.margin(1.0 - dR / (3 * R));
    }
    for (auto* t : {&height, &upper, &lower, &area, &width}) out.push_back(t->r);
  }
  {
    Tracker t("curvature-condition-implication", "max_error", 0.0);
    geometry::ShapeSampler sampler(seed + 6);
    for (int i = 0; i < count; ++i) {
      const auto s = (i % 3 == 2) ? sampler.polygon() : sampler.smooth();
      t.error(geometry::corollary_implication_check(s) ? 0.0 : 1.0);
    }
    out.push_back(t.r);
  }
  {
    Tracker t("ellipse-thickness-predicate", "max_error", 0.0);
    std::mt19937_64 rng(seed + 7);
    for (int i = 0; i < count; ++i) {
      const auto s = random_ellipse(rng);
      const auto& e = std::get<geometry::Ellipse>(s.kind());
      const double lhs = e.semi_r / e.semi_z + 1.0;
      const double rhs = e.center_r / std::sqrt((e.center_r - e.semi_r) * (e.center_r + e.semi_r));
      if (std::abs(lhs - rhs) <= 1e-12 * rhs) continue;  // equality band
      const bool predicate = geometry::ellipse_thickness_predicate(e.center_r, e.semi_r, e.semi_z);
      t.error(geometry::geometry_report(s).is_thick == predicate ? 0.0 : 1.0);
    }
    out.push_back(t.r);
  }
  return out;
}

}  // namespace bubblering::cli
