#include "bubblering/geometry/cross_section.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bubblering/errors.hpp"

namespace bubblering::geometry {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSymmetryTol = 1e-12;
constexpr double kConvexityTol = 1e-10;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ShapeError("positive-parameters",
                     std::string(what) + " must be positive, got " + fmt(v));
  }
}

CurveSample sample_ellipse(double c, double m, double n, double t) {
  const double ct = std::cos(t);
  const double st = std::sin(t);
  return {{c + m * ct, n * st}, {-m * st, n * ct}, {-m * ct, -n * st}};
}

CurveSample sample_star(const FourierStar& s, double t) {
  const double ct = std::cos(t);
  const double st = std::sin(t);
  double rho = s.base_radius;
  double drho = 0.0;
  double ddrho = 0.0;
  for (std::size_t i = 0; i < s.cosine_coeffs.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    const double c = s.cosine_coeffs[i];
    rho += c * std::cos(k * t);
    drho -= k * c * std::sin(k * t);
    ddrho -= k * k * c * std::cos(k * t);
  }
  CurveSample out;
  out.x = {s.center_r + rho * ct, rho * st};
  out.dx = {drho * ct - rho * st, drho * st + rho * ct};
  out.ddx = {ddrho * ct - 2.0 * drho * st - rho * ct,
             ddrho * st + 2.0 * drho * ct - rho * st};
  return out;
}

double cross(Point a, Point b) { return a.r * b.z - a.z * b.r; }

}  // namespace

double signed_curvature(const CurveSample& s) {
  const double speed2 = s.dx.r * s.dx.r + s.dx.z * s.dx.z;
  return (s.dx.r * s.ddx.z - s.dx.z * s.ddx.r) / (speed2 * std::sqrt(speed2));
}

CrossSection::CrossSection(ShapeKind kind, int resolution)
    : kind_(std::move(kind)), resolution_(resolution) {
  validate();
}

bool CrossSection::is_smooth() const noexcept {
  return !std::holds_alternative<Polygon>(kind_);
}

std::string CrossSection::kind_name() const {
  return std::visit(Overloaded{[](const Ellipse&) { return "ellipse"; },
                               [](const Disk&) { return "disk"; },
                               [](const FourierStar&) { return "fourier-star"; },
                               [](const Polygon&) { return "polygon"; }},
                    kind_);
}

CurveSample CrossSection::sample(double t) const {
  return std::visit(
      Overloaded{
          [t](const Ellipse& e) {
            return sample_ellipse(e.center_r, e.semi_r, e.semi_z, t);
          },
          [t](const Disk& d) {
            return sample_ellipse(d.center_r, d.radius, d.radius, t);
          },
          [t](const FourierStar& s) { return sample_star(s, t); },
          [](const Polygon&) -> CurveSample {
            throw UnsupportedShapeError(
                "polygon cross-sections have no smooth parameterization");
          }},
      kind_);
}

const std::vector<Point>& CrossSection::vertices() const {
  if (const auto* p = std::get_if<Polygon>(&kind_)) return p->vertices;
  throw UnsupportedShapeError("vertices() requires a polygon cross-section");
}

CrossSection CrossSection::with_resolution(int resolution) const {
  return CrossSection(kind_, resolution);
}

CrossSection CrossSection::scaled(double factor) const {
  require_positive(factor, "scale factor");
  ShapeKind k = std::visit(
      Overloaded{
          [factor](const Ellipse& e) -> ShapeKind {
            return Ellipse{e.center_r * factor, e.semi_r * factor,
                           e.semi_z * factor};
          },
          [factor](const Disk& d) -> ShapeKind {
            return Disk{d.center_r * factor, d.radius * factor};
          },
          [factor](const FourierStar& s) -> ShapeKind {
            FourierStar out{s.center_r * factor, s.base_radius * factor,
                            s.cosine_coeffs};
            for (double& c : out.cosine_coeffs) c *= factor;
            return out;
          },
          [factor](const Polygon& p) -> ShapeKind {
            Polygon out = p;
            for (Point& v : out.vertices) {
              v.r *= factor;
              v.z *= factor;
            }
            return out;
          }},
      kind_);
  return CrossSection(std::move(k), resolution_);
}

void CrossSection::validate() {
  if (is_smooth() && (resolution_ < 16 || resolution_ % 2 != 0 ||
                      resolution_ > kMaxResolution)) {
    throw ShapeError("resolution", "smooth kinds need an even node count in [16, " +
                                       std::to_string(kMaxResolution) + "], got " +
                                       std::to_string(resolution_));
  }
  if (!is_smooth() && resolution_ < 1) {
    throw ShapeError("resolution", "must be a positive integer");
  }

  if (auto* e = std::get_if<Ellipse>(&kind_)) {
    require_positive(e->center_r, "center_r");
    require_positive(e->semi_r, "semi-axis m");
    require_positive(e->semi_z, "semi-axis n");
    if (!(e->center_r - e->semi_r > 0.0)) {
      throw ShapeError("axis-clearance", "ellipse reaches r <= 0 (R0 = " +
                                             fmt(e->center_r) + ", m = " +
                                             fmt(e->semi_r) + ")");
    }
    length_scale_ = std::sqrt(0.5 * e->semi_r * e->semi_z);
    return;
  }
  if (auto* d = std::get_if<Disk>(&kind_)) {
    require_positive(d->center_r, "center_r");
    require_positive(d->radius, "radius");
    if (!(d->center_r - d->radius > 0.0)) {
      throw ShapeError("axis-clearance", "disk reaches r <= 0 (R0 = " +
                                             fmt(d->center_r) + ", radius = " +
                                             fmt(d->radius) + ")");
    }
    length_scale_ = d->radius / std::sqrt(2.0);
    return;
  }
  if (auto* s = std::get_if<FourierStar>(&kind_)) {
    require_positive(s->center_r, "center_r");
    require_positive(s->base_radius, "base_radius");
    for (double c : s->cosine_coeffs) {
      if (!std::isfinite(c)) throw ShapeError("positive-parameters", "non-finite coefficient");
    }
    const int n = resolution_;
    const double dt = kTwoPi / n;
    double area = 0.0;
    double min_kappa = INFINITY;
    for (int j = 0; j < n; ++j) {
      const double t = j * dt;
      double rho = s->base_radius;
      for (std::size_t i = 0; i < s->cosine_coeffs.size(); ++i) {
        rho += s->cosine_coeffs[i] * std::cos(static_cast<double>(i + 1) * t);
      }
      if (!(rho > 0.0)) {
        throw ShapeError("positive-area", "polar radius is not positive at t = " + fmt(t));
      }
      const CurveSample c = sample_star(*s, t);
      if (!(c.x.r > 0.0)) {
        throw ShapeError("axis-clearance",
                         "fourier-star reaches r = " + fmt(c.x.r) + " <= 0");
      }
      area += c.x.r * c.dx.z * dt;
      min_kappa = std::min(min_kappa, signed_curvature(c));
    }
    require_positive(area, "area");
    length_scale_ = std::sqrt(area / kTwoPi);
    if (min_kappa < -kConvexityTol / length_scale_) {
      throw ShapeError("convex", "signed curvature reaches " + fmt(min_kappa));
    }
    return;
  }

  auto& verts = std::get<Polygon>(kind_).vertices;
  if (verts.size() < 3) {
    throw ShapeError("positive-area", "polygon needs at least 3 vertices");
  }
  double signed_area = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Point& a = verts[i];
    const Point& b = verts[(i + 1) % verts.size()];
    if (!std::isfinite(a.r) || !std::isfinite(a.z)) {
      throw ShapeError("positive-parameters", "non-finite vertex");
    }
    signed_area += 0.5 * cross(a, b);
    scale = std::max({scale, std::abs(a.r), std::abs(a.z)});
  }
  if (signed_area < 0.0) {
    std::reverse(verts.begin(), verts.end());
    signed_area = -signed_area;
  }
  if (!(signed_area > 0.0)) {
    throw ShapeError("positive-area", "polygon encloses zero area");
  }
  for (const Point& v : verts) {
    if (!(v.r > 0.0)) {
      throw ShapeError("axis-clearance", "vertex at r = " + fmt(v.r) + " <= 0");
    }
  }
  double turning = 0.0;
  const std::size_t nv = verts.size();
  for (std::size_t i = 0; i < nv; ++i) {
    const Point& prev = verts[(i + nv - 1) % nv];
    const Point& cur = verts[i];
    const Point& next = verts[(i + 1) % nv];
    const Point e1{cur.r - prev.r, cur.z - prev.z};
    const Point e2{next.r - cur.r, next.z - cur.z};
    const double l1 = std::hypot(e1.r, e1.z);
    const double l2 = std::hypot(e2.r, e2.z);
    if (!(l1 > 0.0) || !(l2 > 0.0)) {
      throw ShapeError("simple", "repeated vertex " + std::to_string(i));
    }
    const double c = cross(e1, e2);
    if (c < -kConvexityTol * l1 * l2) {
      throw ShapeError("convex", "negative turning angle at vertex " + std::to_string(i));
    }
    turning += std::atan2(c, e1.r * e2.r + e1.z * e2.z);
  }
  if (std::abs(turning - kTwoPi) > 1e-9) {
    throw ShapeError("simple", "total turning " + fmt(turning) + " differs from 2pi");
  }
  for (const Point& v : verts) {
    const bool mirrored = std::any_of(verts.begin(), verts.end(), [&](const Point& u) {
      return std::abs(u.r - v.r) <= kSymmetryTol * scale &&
             std::abs(u.z + v.z) <= kSymmetryTol * scale;
    });
    if (!mirrored) {
      throw ShapeError("z-symmetry", "vertex (" + fmt(v.r) + ", " + fmt(v.z) +
                                         ") has no mirror image under z -> -z");
    }
  }
  length_scale_ = std::sqrt(signed_area / kTwoPi);
}

}  // namespace bubblering::geometry
