#include "bubblering/geometry/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "bubblering/errors.hpp"

namespace bubblering::geometry {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kAgreeTol = 1e-9;
constexpr double kFailTol = 1e-8;

double node_param(int j, int n) { return kTwoPi * j / n; }

Point outward_normal(const CurveSample& s) {
  const double speed = std::hypot(s.dx.r, s.dx.z);
  return {s.dx.z / speed, -s.dx.r / speed};
}

// (ln b - ln a) / (b - a), stable when b is close to a.
double log_slope(double a, double b) {
  const double x = (b - a) / a;
  if (x == 0.0) return 1.0 / a;
  return std::log1p(x) / (a * x);
}

// Extremum of f(t) over the closed curve, refined around the best node.
template <class F>
double refine_max(const CrossSection& shape, F&& f) {
  const int n = shape.resolution();
  int best = 0;
  double best_val = -INFINITY;
  for (int j = 0; j < n; ++j) {
    const double v = f(node_param(j, n));
    if (v > best_val) {
      best_val = v;
      best = j;
    }
  }
  const double lo = node_param(best - 1, n);
  const double hi = node_param(best + 1, n);
  const auto res = boost::math::tools::brent_find_minima(
      [&](double t) { return -f(t); }, lo, hi, std::numeric_limits<double>::digits);
  return std::max(best_val, -res.second);
}

struct EdgeView {
  Point a;
  Point b;
};

EdgeView edge(const std::vector<Point>& v, std::size_t i) {
  return {v[i], v[(i + 1) % v.size()]};
}

}  // namespace

double BoundaryNodes::perimeter() const {
  double p = 0.0;
  for (double w : weight) p += w;
  return p;
}

double BoundaryNodes::total_curvature() const {
  double total = 0.0;
  if (smooth) {
    for (std::size_t i = 0; i < size(); ++i) total += curvature[i] * weight[i];
  } else {
    for (double a : turning_angle) total += a;
  }
  return total;
}

BoundaryNodes boundary_nodes(const CrossSection& shape) {
  BoundaryNodes out;
  if (shape.is_smooth()) {
    const int n = shape.resolution();
    out.smooth = true;
    out.position.reserve(n);
    out.normal.reserve(n);
    out.weight.reserve(n);
    out.curvature.reserve(n);
    out.speed.reserve(n);
    for (int j = 0; j < n; ++j) {
      const CurveSample s = shape.sample(node_param(j, n));
      const double speed = std::hypot(s.dx.r, s.dx.z);
      out.position.push_back(s.x);
      out.normal.push_back(outward_normal(s));
      out.speed.push_back(speed);
      out.weight.push_back(speed * kTwoPi / n);
      out.curvature.push_back(signed_curvature(s));
    }
    return out;
  }
  const auto& v = shape.vertices();
  const std::size_t nv = v.size();
  out.smooth = false;
  for (std::size_t i = 0; i < nv; ++i) {
    const auto [a, b] = edge(v, i);
    const double len = std::hypot(b.r - a.r, b.z - a.z);
    out.position.push_back({0.5 * (a.r + b.r), 0.5 * (a.z + b.z)});
    out.normal.push_back({(b.z - a.z) / len, -(b.r - a.r) / len});
    out.weight.push_back(len);
  }
  for (std::size_t i = 0; i < nv; ++i) {
    const Point& prev = v[(i + nv - 1) % nv];
    const Point& cur = v[i];
    const Point& next = v[(i + 1) % nv];
    const double e1r = cur.r - prev.r, e1z = cur.z - prev.z;
    const double e2r = next.r - cur.r, e2z = next.z - cur.z;
    out.turning_angle.push_back(
        std::atan2(e1r * e2z - e1z * e2r, e1r * e2r + e1z * e2z));
  }
  return out;
}

Extents extents(const CrossSection& shape) {
  Extents e;
  if (!shape.is_smooth()) {
    e.r_min = INFINITY;
    e.r_max = -INFINITY;
    e.height = -INFINITY;
    for (const Point& p : shape.vertices()) {
      e.r_min = std::min(e.r_min, p.r);
      e.r_max = std::max(e.r_max, p.r);
      e.height = std::max(e.height, p.z);
    }
    return e;
  }
  e.r_max = refine_max(shape, [&](double t) { return shape.sample(t).x.r; });
  e.r_min = -refine_max(shape, [&](double t) { return -shape.sample(t).x.r; });
  e.height = refine_max(shape, [&](double t) { return shape.sample(t).x.z; });
  return e;
}

GeometryReport geometry_report_fixed(const CrossSection& shape) {
  GeometryReport rep;
  const Extents ext = extents(shape);
  rep.r_min = ext.r_min;
  rep.r_max = ext.r_max;
  rep.height_h = ext.height;
  rep.resolution = shape.resolution();

  double moment = 0.0;
  double azimuthal = 0.0;  // oint n_r / r ds
  if (shape.is_smooth()) {
    const BoundaryNodes nodes = boundary_nodes(shape);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double r = nodes.position[i].r;
      const double nr = nodes.normal[i].r;
      const double w = nodes.weight[i];
      rep.area += r * nr * w;
      moment += 0.5 * r * r * nr * w;
      azimuthal += nr / r * w;
      rep.perimeter += w;
    }
    rep.total_curvature = nodes.total_curvature();
  } else {
    const auto& v = shape.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto [a, b] = edge(v, i);
      const double dz = b.z - a.z;
      rep.area += 0.5 * dz * (a.r + b.r);
      moment += dz * (a.r * a.r + a.r * b.r + b.r * b.r) / 6.0;
      azimuthal += dz * log_slope(a.r, b.r);
      rep.perimeter += std::hypot(b.r - a.r, dz);
    }
    rep.total_curvature = boundary_nodes(shape).total_curvature();
  }
  rep.inverse_square_integral = -azimuthal;
  rep.delta = rep.inverse_square_integral - kTwoPi;
  rep.total_mean_curvature = rep.total_curvature + azimuthal;
  rep.is_thick = rep.total_mean_curvature <= 0.0;
  rep.major_radius = moment / rep.area;
  rep.minor_radius = std::sqrt(rep.area / kTwoPi);
  rep.mu = rep.major_radius / rep.minor_radius;
  rep.mu_sqrt_area = rep.major_radius / std::sqrt(rep.area);
  return rep;
}

GeometryReport geometry_report(const CrossSection& shape) {
  if (!shape.is_smooth()) return geometry_report_fixed(shape);
  int n = shape.resolution();
  GeometryReport coarse = geometry_report_fixed(
      shape.with_resolution(std::max(16, (n / 2) & ~1)));
  for (;;) {
    GeometryReport fine = geometry_report_fixed(shape.with_resolution(n));
    const double err =
        std::abs(fine.inverse_square_integral - coarse.inverse_square_integral);
    const double scale = std::abs(fine.inverse_square_integral);
    fine.quadrature_error = err;
    if (err <= kAgreeTol * scale) return fine;
    if (2 * n > kMaxResolution) {
      if (err > kFailTol * scale) {
        std::ostringstream msg;
        msg << "inverse-square integral not converged at " << n
            << " nodes (estimated relative error " << err / scale << ")";
        throw QuadratureError(msg.str());
      }
      return fine;
    }
    coarse = fine;
    n *= 2;
  }
}

WidthProfile width_height(const CrossSection& shape, int levels) {
  WidthProfile out;
  const Extents ext = extents(shape);
  out.height = ext.height;
  out.delta_r = ext.r_max - ext.r_min;
  if (levels <= 0) levels = shape.resolution() / 2 + 1;
  levels = std::max(levels, 3);
  out.z.resize(levels);
  out.width.resize(levels);
  for (int i = 0; i < levels; ++i) {
    out.z[i] = -out.height + 2.0 * out.height * i / (levels - 1);
  }

  if (!shape.is_smooth()) {
    const auto& v = shape.vertices();
    for (int i = 0; i < levels; ++i) {
      const double z0 = out.z[i];
      double lo = INFINITY, hi = -INFINITY;
      for (std::size_t e = 0; e < v.size(); ++e) {
        const auto [a, b] = edge(v, e);
        const double zmin = std::min(a.z, b.z), zmax = std::max(a.z, b.z);
        if (z0 < zmin || z0 > zmax) continue;
        if (a.z == b.z) {
          lo = std::min({lo, a.r, b.r});
          hi = std::max({hi, a.r, b.r});
        } else {
          const double r = a.r + (b.r - a.r) * (z0 - a.z) / (b.z - a.z);
          lo = std::min(lo, r);
          hi = std::max(hi, r);
        }
      }
      out.width[i] = hi >= lo ? hi - lo : 0.0;
    }
    return out;
  }

  const int n = shape.resolution();
  std::vector<double> zs(n);
  for (int j = 0; j < n; ++j) zs[j] = shape.sample(node_param(j, n)).x.z;
  for (int i = 0; i < levels; ++i) {
    const double z0 = out.z[i];
    if (i == 0 || i == levels - 1) {
      out.width[i] = 0.0;
      continue;
    }
    double lo = INFINITY, hi = -INFINITY;
    for (int j = 0; j < n; ++j) {
      const double g0 = zs[j] - z0;
      const double g1 = zs[(j + 1) % n] - z0;
      if (g0 == 0.0) {
        const double r = shape.sample(node_param(j, n)).x.r;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        continue;
      }
      if ((g0 < 0.0) == (g1 < 0.0) || g1 == 0.0) continue;
      std::uintmax_t iters = 100;
      const auto root = boost::math::tools::toms748_solve(
          [&](double t) { return shape.sample(t).x.z - z0; }, node_param(j, n),
          node_param(j + 1, n), g0, g1, boost::math::tools::eps_tolerance<double>(),
          iters);
      const double r = shape.sample(0.5 * (root.first + root.second)).x.r;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    out.width[i] = hi >= lo ? hi - lo : 0.0;
  }
  return out;
}

double surface_set_length(const CrossSection& shape, double b) {
  if (!(b >= 0.0) || !(b < 1.0)) {
    throw std::invalid_argument("surface_set_length: b must lie in [0, 1)");
  }
  if (!shape.is_smooth()) {
    const BoundaryNodes nodes = boundary_nodes(shape);
    double len = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes.normal[i].r > b) len += nodes.weight[i];
    }
    return len;
  }
  using boost::math::quadrature::gauss_kronrod;
  const int n = shape.resolution();
  const auto g = [&](double t) { return outward_normal(shape.sample(t)).r - b; };
  const auto speed = [&](double t) {
    const CurveSample s = shape.sample(t);
    return std::hypot(s.dx.r, s.dx.z);
  };
  const auto root_in = [&](double t0, double t1, double g0, double g1) {
    std::uintmax_t iters = 100;
    const auto root = boost::math::tools::toms748_solve(
        g, t0, t1, g0, g1, boost::math::tools::eps_tolerance<double>(), iters);
    return 0.5 * (root.first + root.second);
  };
  double len = 0.0;
  double g_prev = g(0.0);
  for (int j = 0; j < n; ++j) {
    const double t0 = node_param(j, n);
    const double t1 = node_param(j + 1, n);
    const double g0 = g_prev;
    const double g1 = g(t1);
    g_prev = g1;
    if (g0 > 0.0 && g1 > 0.0) {
      len += gauss_kronrod<double, 15>::integrate(speed, t0, t1, 0);
    } else if (g0 > 0.0 && g1 <= 0.0) {
      const double tr = g1 == 0.0 ? t1 : root_in(t0, t1, g0, g1);
      len += gauss_kronrod<double, 15>::integrate(speed, t0, tr, 0);
    } else if (g0 <= 0.0 && g1 > 0.0) {
      const double tl = g0 == 0.0 ? t0 : root_in(t0, t1, g0, g1);
      len += gauss_kronrod<double, 15>::integrate(speed, tl, t1, 0);
    }
  }
  return len;
}

double lemma3_ratio(const CrossSection& shape) {
  const GeometryReport rep = geometry_report(shape);
  return rep.r_max / rep.major_radius;
}

double certificate_b_choice(double major_radius) {
  if (major_radius * major_radius >= kPi / 18.0) {
    return kPi / (36.0 * major_radius * major_radius);
  }
  return 0.5;
}

bool corollary_implication_check(const CrossSection& shape, double tol) {
  const GeometryReport rep = geometry_report(shape);
  const bool fat = kTwoPi * rep.major_radius * rep.major_radius <= rep.area;
  return !fat || rep.delta >= -tol;
}

double weber_number(const PhysicalParams& params, double area) {
  if (!(params.rho > 0.0) || !(params.sigma > 0.0) || !(params.beta > 0.0) ||
      !(area > 0.0)) {
    throw std::invalid_argument("weber_number: rho, sigma, beta and area must be positive");
  }
  return std::sqrt(kTwoPi) * params.rho * params.beta * params.beta /
         (params.sigma * std::sqrt(area));
}

Normalized normalize(const CrossSection& shape, const PhysicalParams& params) {
  if (!(params.rho > 0.0) || !(params.sigma > 0.0) || !(params.beta > 0.0)) {
    throw std::invalid_argument("normalize: physical parameters must be positive");
  }
  const double a = shape.length_scale();
  return Normalized{shape.scaled(1.0 / a), a, a / params.beta,
                    1.0 / (a * params.beta), a / params.sigma};
}

double ellipse_inverse_square_integral(double center_r, double semi_r,
                                       double semi_z) {
  // (2 pi n / m)(R0 / sqrt(R0^2 - m^2) - 1), rewritten without cancellation.
  const double s = std::sqrt((center_r - semi_r) * (center_r + semi_r)) / center_r;
  return kTwoPi * semi_z * semi_r / (center_r * center_r * s * (1.0 + s));
}

double disk_delta(double center_r, double radius) {
  return ellipse_inverse_square_integral(center_r, radius, radius) - kTwoPi;
}

bool ellipse_thickness_predicate(double center_r, double semi_r, double semi_z) {
  return semi_r / semi_z + 1.0 <=
         center_r / std::sqrt((center_r - semi_r) * (center_r + semi_r));
}

}  // namespace bubblering::geometry
