#include "bubblering/geometry/random_shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bubblering/errors.hpp"

namespace bubblering::geometry {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kMaxAttempts = 1000;
}  // namespace

double ShapeSampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

double ShapeSampler::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

CrossSection ShapeSampler::ellipse() {
  const double m = log_uniform(0.2, 2.0);
  const double n = log_uniform(0.2, 2.0);
  const double gap = m * log_uniform(0.02, 3.0);
  return CrossSection(Ellipse{m + gap, m, n});
}

CrossSection ShapeSampler::disk() {
  const double rho = log_uniform(0.2, 2.0);
  const double gap = rho * log_uniform(0.02, 3.0);
  return CrossSection(Disk{rho + gap, rho});
}

CrossSection ShapeSampler::fourier_star() {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double base = log_uniform(0.3, 2.0);
    const int modes = std::uniform_int_distribution<int>(2, 5)(rng_);
    std::vector<double> coeffs(modes);
    for (int k = 1; k <= modes; ++k) {
      coeffs[k - 1] = base * uniform(-0.25, 0.25) / (k * k);
    }
    // Leftmost extent over a fine grid fixes the shift off the axis.
    double left = 0.0;
    for (int j = 0; j < 4096; ++j) {
      const double t = 2.0 * kPi * j / 4096;
      double rho = base;
      for (int k = 1; k <= modes; ++k) rho += coeffs[k - 1] * std::cos(k * t);
      left = std::max(left, -rho * std::cos(t));
    }
    const double center = left + base * log_uniform(0.03, 3.0);
    try {
      return CrossSection(FourierStar{center, base, coeffs});
    } catch (const ShapeError&) {
      // Non-convex draw; resample.
    }
  }
  throw ShapeError("convex", "fourier_star sampler exhausted its attempts");
}

CrossSection ShapeSampler::smooth() {
  switch (std::uniform_int_distribution<int>(0, 2)(rng_)) {
    case 0:
      return ellipse();
    case 1:
      return disk();
    default:
      return fourier_star();
  }
}

CrossSection ShapeSampler::polygon() {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int half = std::uniform_int_distribution<int>(2, 9)(rng_);
    std::vector<Point> pts;
    pts.push_back({uniform(0.3, 1.5), 0.0});
    pts.push_back({-uniform(0.3, 1.5), 0.0});
    for (int j = 1; j <= half; ++j) {
      const double theta = kPi * (j - 0.5 + uniform(-0.4, 0.4)) / half;
      const double rad = uniform(0.3, 1.5);
      pts.push_back({rad * std::cos(theta), rad * std::sin(theta)});
      pts.push_back({rad * std::cos(theta), -rad * std::sin(theta)});
    }
    std::vector<Point> hull = convex_hull(pts);
    if (hull.size() < 3) continue;
    double area = 0.0;
    double rmin = INFINITY;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point& a = hull[i];
      const Point& b = hull[(i + 1) % hull.size()];
      area += 0.5 * (a.r * b.z - a.z * b.r);
      rmin = std::min(rmin, a.r);
    }
    const double a_scale = std::sqrt(area / (2.0 * kPi));
    const double shift = a_scale * (0.1 + log_uniform(0.01, 3.0)) - rmin;
    const double scale = log_uniform(0.3, 3.0);
    for (Point& p : hull) {
      p.r = (p.r + shift) * scale;
      p.z *= scale;
    }
    try {
      return CrossSection(Polygon{hull});
    } catch (const ShapeError&) {
      // Rounding broke the mirror symmetry of the hull; resample.
    }
  }
  throw ShapeError("z-symmetry", "polygon sampler exhausted its attempts");
}

CrossSection axis_triangle(double eps, double half_height, double apex_r) {
  return CrossSection(
      Polygon{{{eps, -half_height}, {apex_r, 0.0}, {eps, half_height}}});
}

std::vector<Point> convex_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.r < b.r || (a.r == b.r && a.z < b.z);
  });
  const auto turn = [](const Point& o, const Point& a, const Point& b) {
    return (a.r - o.r) * (b.z - o.z) - (a.z - o.z) * (b.r - o.r);
  };
  const std::size_t n = points.size();
  if (n < 3) return points;
  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i > 0; --i) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], points[i - 1]) <= 0.0) --k;
    hull[k++] = points[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace bubblering::geometry
