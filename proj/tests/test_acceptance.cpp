// Acceptance gate. One PASS/FAIL line per criterion; exit status is the
// number of failing criteria (0 when all pass). Closed forms are written out
// here rather than taken from the library.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bubblering/certify/bound.hpp"
#include "bubblering/errors.hpp"
#include "bubblering/geometry/functionals.hpp"
#include "bubblering/geometry/random_shapes.hpp"
#include "bubblering/stream/kernel.hpp"
#include "bubblering/stream/minimize.hpp"
#include "bubblering/stream/solver.hpp"

using namespace bubblering;
using geometry::CrossSection;
using geometry::Point;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

// Pinned tolerances and limits.
constexpr double kTolEllipse = 1e-10;         // 1, relative
constexpr double kLimitEllipse = 5.0;         // 1, seconds
constexpr double kTolMeanCurvature = 1e-8;    // 2
constexpr double kLimitMeanCurvature = 30.0;  // 2, seconds
constexpr double kTolGaussBonnet = 1e-8;      // 3, smooth
// 3, polygons: the turning-angle sum is exact up to rounding of N atan2
// terms; 64 ulp of 2pi.
constexpr double kTolGaussBonnetPolygon = 64 * 2.220446049250313e-16 * kTwoPi;
constexpr double kTolWidthRatio = 1e-10;          // 4
constexpr double kTolSharpness = 1e-12;       // 4
constexpr double kTolImplication = 1e-10;     // 6
constexpr double kTolManufactured = 1e-8;     // 7, sup-norm
constexpr double kMinConvergenceRatio = 4.0;  // 7
constexpr int kMaxManufacturedResolution = 1024;  // 7
constexpr double kLimitManufactured = 60.0;   // 7, seconds
constexpr double kTolCirculation = 1e-8;      // 8
constexpr double kTolNorbury = 0.02;          // 9, relative to pi sqrt 2
constexpr double kNorburyEps = 1e-4;          // 9
constexpr double kSolverTolerance = 1e-8;     // 10
constexpr double kFloorFactor = 100.0;        // 10
constexpr int kProbeBudget = 2000;            // 10
constexpr double kProbeWeFraction = 0.1;      // 10

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void info(int id, const std::string& detail) {
  std::printf("[INFO] %2d %s\n", id, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds(const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Closed form of int_E r^-2 dA for {(r-R0)^2/m^2 + z^2/n^2 <= 1}.
double ellipse_integral_oracle(double R0, double m, double n) {
  return kTwoPi * n / m * (R0 / std::sqrt(R0 * R0 - m * m) - 1.0);
}

std::vector<CrossSection> smooth_corpus(int count, std::uint64_t seed) {
  geometry::ShapeSampler s(seed);
  std::vector<CrossSection> out;
  for (int i = 0; i < count; ++i) out.push_back(s.smooth());
  return out;
}

void criterion1() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> axis(0.1, 3.0), gap(std::log(1e-2), std::log(10.0));
  double worst = 0.0;
  int bad = 0;
  const double t = seconds([&] {
    for (int i = 0; i < 100; ++i) {
      const double m = axis(rng), n = axis(rng);
      const double R0 = m * (1.0 + std::exp(gap(rng)));
      const double exact = ellipse_integral_oracle(R0, m, n);
      const double got =
          geometry::geometry_report(CrossSection(geometry::Ellipse{R0, m, n})).inverse_square_integral;
      const double e = std::abs(got - exact) / exact;
      worst = std::max(worst, e);
      if (!(e <= kTolEllipse)) ++bad;
    }
  });
  report(1, "ellipse closed form", bad == 0 && t < kLimitEllipse,
         fmt("100 ellipses, worst rel err %.2e (tol %.0e), %d over, %.2f s (limit %.0f s)", worst,
             kTolEllipse, bad, t, kLimitEllipse));
}

void criteria2and3() {
  double worst_h = 0.0, worst_k = 0.0;
  int bad_h = 0, bad_k = 0;
  const double t = seconds([&] {
    for (const auto& s : smooth_corpus(200, 202)) {
      const auto rep = geometry::geometry_report(s);
      const double eh = std::abs(rep.total_mean_curvature + rep.delta);
      const double ek = std::abs(rep.total_curvature - kTwoPi);
      worst_h = std::max(worst_h, eh);
      worst_k = std::max(worst_k, ek);
      if (!(eh <= kTolMeanCurvature)) ++bad_h;
      if (!(ek <= kTolGaussBonnet)) ++bad_k;
    }
  });
  report(2, "mean-curvature identity", bad_h == 0 && t < kLimitMeanCurvature,
         fmt("200 smooth shapes, worst |oint H + delta| %.2e (tol %.0e), %d over, %.2f s (limit %.0f s)",
             worst_h, kTolMeanCurvature, bad_h, t, kLimitMeanCurvature));

  geometry::ShapeSampler ps(303);
  double worst_p = 0.0;
  int bad_p = 0;
  for (int i = 0; i < 200; ++i) {
    const double e = std::abs(geometry::boundary_nodes(ps.polygon()).total_curvature() - kTwoPi);
    worst_p = std::max(worst_p, e);
    if (!(e <= kTolGaussBonnetPolygon)) ++bad_p;
  }
  report(3, "Gauss-Bonnet", bad_k == 0 && bad_p == 0,
         fmt("smooth worst %.2e (tol %.0e, %d over); 200 polygons worst %.2e (tol %.1e, %d over)",
             worst_k, kTolGaussBonnet, bad_k, worst_p, kTolGaussBonnetPolygon, bad_p));
}

void criterion4() {
  geometry::ShapeSampler ps(404);
  double worst = 0.0;
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    const double ratio = geometry::lemma3_ratio(ps.polygon());
    worst = std::max(worst, ratio);
    if (!(ratio <= 3.0 + kTolWidthRatio)) ++bad;
  }
  const double sharp =
      std::abs(geometry::lemma3_ratio(geometry::axis_triangle(1e-14, 1.0, 2.0)) - 3.0);
  report(4, "R_max/R <= 3 and sharpness", bad == 0 && sharp <= kTolSharpness,
         fmt("500 polygons, max ratio %.6f (bound 3 + %.0e, %d over); axis triangle |ratio - 3| %.2e (tol %.0e)",
             worst, kTolWidthRatio, bad, sharp, kTolSharpness));
}

void criterion5() {
  geometry::ShapeSampler sampler(505);
  int violations = 0;
  double m_height = INFINITY, m_upper = INFINITY, m_lower = INFINITY, marea = INFINITY, mwidth = INFINITY;
  for (int i = 0; i < 200; ++i) {
    const CrossSection raw = (i % 3 == 2) ? sampler.polygon() : sampler.smooth();
    const CrossSection s = geometry::normalize(raw).shape;
    const auto rep = geometry::geometry_report(s);
    const double R = rep.major_radius, h = rep.height_h, dR = rep.r_max - rep.r_min;
    // b* chosen independently of the library: pi/(36R^2) above sqrt(pi/18), else 1/2.
    const double b = R >= std::sqrt(kPi / 18) ? kPi / (36 * R * R) : 0.5;
    const double s0 = geometry::surface_set_length(s, 0.0);
    const double sb = geometry::surface_set_length(s, b);
    const double margins[] = {2 * h - 2 * kPi / (3 * R), 2 * h + 6 * R - s0, sb - kPi / (3 * R),
                              h * dR - kPi, 3 * R - dR};
    for (double m : margins) violations += m < 0.0;
    m_height = std::min(m_height, margins[0]);
    m_upper = std::min(m_upper, margins[1]);
    m_lower = std::min(m_lower, margins[2]);
    marea = std::min(marea, margins[3]);
    mwidth = std::min(mwidth, margins[4]);
  }
  report(5, "bound-chain inequalities", violations == 0,
         fmt("200 normalized shapes, %d violations; min margins %.3g %.3g %.3g %.3g %.3g", violations,
             m_height, m_upper, m_lower, marea, mwidth));
}

void criterion6() {
  geometry::ShapeSampler sampler(606);
  int premise = 0, bad = 0;
  double worst = INFINITY;
  for (int i = 0; i < 500; ++i) {
    const CrossSection s = (i % 3 == 2) ? sampler.polygon() : sampler.smooth();
    const auto rep = geometry::geometry_report(s);
    if (kTwoPi * rep.major_radius * rep.major_radius <= rep.area) {
      ++premise;
      worst = std::min(worst, rep.delta);
      if (!(rep.delta >= -kTolImplication)) ++bad;
    }
  }
  report(6, "fat shapes have delta >= 0", bad == 0 && premise > 0,
         fmt("500 shapes, %d meet 2 pi R^2 <= |E|, min delta among them %.3g (floor -%.0e), %d violations",
             premise, worst, kTolImplication, bad));
}

double manufactured_error(int N) {
  const CrossSection shape(geometry::Ellipse{4.0, 1.0, 0.7}, N);
  const Point filament{4.95, 0.01};
  const double strength = 1.3;
  const stream::BoundaryOperator op(shape);
  std::vector<double> data(N);
  for (int i = 0; i < N; ++i) data[i] = stream::filament_stream(filament, strength, op.nodes().position[i]);
  const auto sol = op.solve_with_data(data, strength);
  // Test ring one diameter (2) outside the boundary.
  double err = 0.0;
  for (int j = 0; j < 64; ++j) {
    const double th = kTwoPi * j / 64;
    const Point x{4.0 + 3.0 * std::cos(th), 2.7 * std::sin(th)};
    err = std::max(err, std::abs(stream::exterior_psi(sol, x) -
                                 stream::filament_stream(filament, strength, x)));
  }
  return err;
}

void criterion7() {
  std::vector<int> res{128, 256, 512, 1024};
  std::vector<double> err;
  const double t = seconds([&] {
    for (int N : res) err.push_back(manufactured_error(N));
  });
  int reached = 0;
  for (std::size_t i = 0; i < res.size() && !reached; ++i) {
    if (err[i] <= kTolManufactured && res[i] <= kMaxManufacturedResolution) reached = res[i];
  }
  const double r1 = err[0] / err[1], r2 = err[1] / err[2];
  report(7, "manufactured filament solution",
         reached > 0 && r1 >= kMinConvergenceRatio && r2 >= kMinConvergenceRatio &&
             t < kLimitManufactured,
         fmt("sup err N=128 %.2e, 256 %.2e, 512 %.2e, 1024 %.2e; tol %.0e first met at N=%d; "
             "ratios %.3g, %.3g (min %.0f); %.2f s (limit %.0f s)",
             err[0], err[1], err[2], err[3], kTolManufactured, reached, r1, r2,
             kMinConvergenceRatio, t, kLimitManufactured));
}

void criterion8() {
  geometry::ShapeSampler sampler(808);
  std::mt19937_64 rng(809);
  std::uniform_real_distribution<double> wdist(-2.0, 2.0);
  int solved = 0, failed = 0, bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 60; ++i) {
    const CrossSection s = geometry::normalize(sampler.smooth()).shape.with_resolution(128);
    try {
      const auto sol = stream::solve_dirichlet(s, wdist(rng));
      double integral = 0.0;
      for (std::size_t k = 0; k < sol.dn_psi.size(); ++k) {
        integral += sol.nodes.weight[k] * sol.dn_psi[k] / sol.nodes.position[k].r;
      }
      const double e = std::abs(integral + 1.0);
      ++solved;
      worst = std::max(worst, e);
      if (!(e <= kTolCirculation)) ++bad;
    } catch (const SolverError&) {
      ++failed;
    }
  }
  report(8, "circulation normalization", bad == 0 && solved > 0,
         fmt("%d successful solves (%d raised SolverError), worst |oint (1/r) dn psi + 1| %.2e (tol %.0e)",
             solved, failed, worst, kTolCirculation));
}

void criterion9() {
  int mono_bad = 0;
  auto mu_at = [](int i) { return 0.05 * std::pow(400.0, i / 19.0); };
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double delta = -1.0 + 0.5 * j;
      const double w = certify::universal_bound(mu_at(i), delta).we_min;
      if (i > 0 && w > certify::universal_bound(mu_at(i - 1), delta).we_min) ++mono_bad;
      if (j > 0 && w < certify::universal_bound(mu_at(i), delta - 0.5).we_min) ++mono_bad;
    }
  }

  // Thirteen log-spaced values from 1e-1 down to kNorburyEps.
  std::vector<double> eps;
  for (int k = 0; k <= 12; ++k) eps.push_back(std::pow(10.0, -1.0 - 3.0 * k / 12.0));
  const auto rows = certify::norbury_scaling_probe(eps, 1.0);
  bool diverges = true;
  for (std::size_t i = 1; i < rows.size(); ++i) diverges = diverges && rows[i].we_min > rows[i - 1].we_min;
  const auto& at = rows.back();
  // Closed-form disk delta, independent of the library: 2pi R0/sqrt(R0^2 - rho^2) - 4pi.
  const double rho = 1.0 - kNorburyEps;
  const double delta_oracle = kTwoPi / std::sqrt(1.0 - rho * rho) - 2 * kTwoPi;
  const double target = kPi * std::sqrt(2.0);
  const double dev = std::abs(at.delta_scaled - target) / target;
  const bool delta_ok = std::abs(at.delta_report - delta_oracle) <= 1e-8 * delta_oracle;
  report(9, "certificate monotonicity and disk scaling",
         mono_bad == 0 && diverges && delta_ok && dev <= kTolNorbury,
         fmt("20x20 grid %d monotonicity violations; we_min increasing over 13 eps from 1e-1 to 1e-4: %s; "
             "delta matches closed form: %s; delta sqrt(eps/R0) at eps/R0=%.0e is %.6f vs pi sqrt2 = %.6f, "
             "deviation %.2f%% (tol %.0f%%)",
             mono_bad, diverges ? "yes" : "no", delta_ok ? "yes" : "no", kNorburyEps,
             at.delta_scaled, target, 100 * dev, 100 * kTolNorbury));
  // Exact expansion: delta sqrt(e) = pi sqrt2 sqrt(1/(1 - e/2)) - 4 pi sqrt(e). The
  // -4 pi sqrt(e) term is 2.83% of pi sqrt2 at e = 1e-4; 2% needs e <= 5.0e-5.
  const double corrected = at.delta_scaled + 4 * kPi * std::sqrt(kNorburyEps);
  auto closed_scaled = [](double e) {
    const double r = 1.0 - e;
    return (kTwoPi / std::sqrt(1.0 - r * r) - 2 * kTwoPi) * std::sqrt(e);
  };
  info(9, fmt("with the -4 pi sqrt(eps) correction added back: %.8f (rel dev %.1e); "
              "closed-form deviation at eps=5e-5 %.3f%%, at eps=1e-6 %.3f%%",
              corrected, std::abs(corrected - target) / target,
              100 * std::abs(closed_scaled(5e-5) - target) / target,
              100 * std::abs(closed_scaled(1e-6) - target) / target));
}

void criterion10() {
  const CrossSection start(geometry::Disk{1.5, std::sqrt(2.0)});
  const auto cert = certify::explicit_bound(start);
  const double we = kProbeWeFraction * cert.measured.we_min;
  const auto family = stream::thick_disk_family(1.5, 128);
  stream::SearchResult a, b;
  const double t = seconds([&] {
    a = stream::residual_minimize(family, we, kProbeBudget, 2024);
    b = stream::residual_minimize(family, we, kProbeBudget, 2024);
  });
  const double floor = a.report.dyn_residual_l2;
  const bool deterministic = stream::evaluation_log_csv(a) == stream::evaluation_log_csv(b);
  report(10, "non-existence probe (thick disks)",
         floor > kFloorFactor * kSolverTolerance && deterministic,
         fmt("We = %.4g (%.1f x measured certificate %.4g); best R0 %.10f after %zu of %d evaluations; "
             "min dyn residual L2 %.4g (must exceed %.0e); deterministic: %s; %.2f s",
             we, kProbeWeFraction, cert.measured.we_min, a.best_params[0], a.log.size(), kProbeBudget,
             floor, kFloorFactor * kSolverTolerance, deterministic ? "yes" : "no", t / 2));
}

}  // namespace

int main() {
  criterion1();
  criteria2and3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d criteria failed\n", failures);
  return failures;
}
