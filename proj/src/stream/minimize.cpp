#include "bubblering/stream/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

#include "bubblering/errors.hpp"
#include "bubblering/geometry/functionals.hpp"

namespace bubblering::stream {

namespace {

const double kSqrt2 = std::sqrt(2.0);
constexpr int kScanPoints = 81;

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

void require_size(std::span<const double> p, std::size_t lo, std::size_t hi,
                  const char* family) {
  if (p.size() < lo || p.size() > hi) {
    throw std::invalid_argument(std::string(family) +
                                ": wrong number of parameters");
  }
  for (double v : p) {
    if (!std::isfinite(v)) {
      throw ShapeError("finite-parameters",
                       std::string(family) + ": non-finite parameter");
    }
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

std::string ShapeFamily::name() const {
  switch (kind) {
    case FamilyKind::ThickDisk:
      return "thick-disk";
    case FamilyKind::Ellipse:
      return "ellipse";
    case FamilyKind::FourierStar:
      return "fourier-star";
  }
  return "unknown";
}

std::vector<std::string> ShapeFamily::parameter_names() const {
  switch (kind) {
    case FamilyKind::ThickDisk:
      return {"R0"};
    case FamilyKind::Ellipse:
      return {"R0", "log_aspect"};
    case FamilyKind::FourierStar: {
      std::vector<std::string> out{"R0"};
      for (std::size_t k = 1; k < initial.size(); ++k) {
        out.push_back("c" + std::to_string(k));
      }
      return out;
    }
  }
  return {};
}

CrossSection ShapeFamily::build(std::span<const double> p) const {
  switch (kind) {
    case FamilyKind::ThickDisk:
      require_size(p, 1, 1, "thick-disk");
      return CrossSection(geometry::Disk{p[0], kSqrt2}, resolution);
    case FamilyKind::Ellipse: {
      require_size(p, 2, 2, "ellipse");
      const double m = kSqrt2 * std::exp(0.5 * p[1]);
      const double n = kSqrt2 * std::exp(-0.5 * p[1]);
      return CrossSection(geometry::Ellipse{p[0], m, n}, resolution);
    }
    case FamilyKind::FourierStar: {
      require_size(p, 1, 64, "fourier-star");
      std::vector<double> coeffs(p.begin() + 1, p.end());
      const CrossSection raw(geometry::FourierStar{p[0], 1.0, coeffs},
                             resolution);
      return geometry::normalize(raw).shape;
    }
  }
  throw std::invalid_argument("unknown shape family");
}

ShapeFamily thick_disk_family(double R0, int resolution) {
  return {FamilyKind::ThickDisk, {R0}, resolution, true};
}

ShapeFamily ellipse_family(double R0, double log_aspect, int resolution) {
  return {FamilyKind::Ellipse, {R0, log_aspect}, resolution, false};
}

ShapeFamily fourier_star_family(double R0, std::vector<double> coeffs,
                                int resolution) {
  std::vector<double> p{R0};
  p.insert(p.end(), coeffs.begin(), coeffs.end());
  return {FamilyKind::FourierStar, std::move(p), resolution, false};
}

ShapeEvaluation evaluate_shape(const CrossSection& shape, double we) {
  if (!(we > 0.0)) throw std::invalid_argument("evaluate_shape: We must be positive");
  const BoundaryOperator op(shape);
  const BoundarySolution s0 = op.solve(0.0, 1.0);
  const BoundarySolution s1 = op.solve(1.0, 0.0);
  const BoundaryNodes& nodes = op.nodes();
  const std::size_t n = nodes.size();

  // q(W) = u + W v with u, v from the two basis solutions.
  std::vector<double> u(n), v(n), twoH(n), w(n);
  double uu = 0.0, vv = 0.0, perim = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = nodes.position[i].r;
    const double nr = nodes.normal[i].r;
    u[i] = s0.dn_psi[i] / r;
    v[i] = s1.dn_psi[i] / r - nr;
    twoH[i] = 2.0 * (nodes.curvature[i] + nr / r);
    w[i] = nodes.weight[i];
    uu += u[i] * u[i] * w[i];
    vv += v[i] * v[i] * w[i];
    perim += w[i];
  }

  const auto best_lambda = [&](double W) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double q = u[i] + W * v[i];
      mean += (twoH[i] - we * q * q) * w[i];
    }
    return std::max(0.0, -mean / perim);
  };
  const auto objective = [&](double W) {
    const double lam = best_lambda(W);
    double f = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double q = u[i] + W * v[i];
      const double d = twoH[i] + lam - we * q * q;
      f += d * d * w[i];
    }
    return f;
  };

  const double bound = vv > 0.0 ? 10.0 * std::sqrt(uu / vv) : 1.0;
  int best = 0;
  double best_f = std::numeric_limits<double>::infinity();
  std::vector<double> grid(kScanPoints);
  for (int k = 0; k < kScanPoints; ++k) {
    grid[k] = -bound + 2.0 * bound * k / (kScanPoints - 1);
    const double f = objective(grid[k]);
    if (f < best_f) {
      best_f = f;
      best = k;
    }
  }
  const double lo = grid[std::max(best - 1, 0)];
  const double hi = grid[std::min(best + 1, kScanPoints - 1)];
  const auto [W_opt, f_opt] = boost::math::tools::brent_find_minima(
      objective, lo, hi, std::numeric_limits<double>::digits / 2);
  const double W = f_opt <= best_f ? W_opt : grid[best];

  ShapeEvaluation out;
  out.W = W;
  out.lambda = best_lambda(W);
  const BoundarySolution sol = op.solve(W, 1.0);
  out.report = dynamic_residual(shape, sol, we, out.lambda);
  out.circulation_error = std::abs(sol.circulation - 1.0);
  return out;
}

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const std::vector<double>& steps, int budget,
    double xtol, double ftol) {
  const std::size_t dim = x0.size();
  NelderMeadResult res;
  res.x = x0;
  res.value = std::numeric_limits<double>::infinity();
  if (budget < 1) return res;

  const auto eval = [&](const std::vector<double>& x) {
    const double v = f(x);
    ++res.evaluations;
    if (v < res.value) {
      res.value = v;
      res.x = x;
    }
    return v;
  };
  const auto exhausted = [&] { return res.evaluations >= budget; };

  std::vector<std::vector<double>> pts{x0};
  std::vector<double> vals{eval(x0)};
  for (std::size_t i = 0; i < dim && !exhausted(); ++i) {
    std::vector<double> x = x0;
    x[i] += steps[i];
    pts.push_back(x);
    vals.push_back(eval(x));
  }
  if (pts.size() < dim + 1) return res;

  std::vector<std::size_t> order(dim + 1);
  const auto combine = [&](const std::vector<double>& a,
                           const std::vector<double>& b, double t) {
    std::vector<double> out(dim);
    for (std::size_t k = 0; k < dim; ++k) out[k] = a[k] + t * (b[k] - a[k]);
    return out;
  };

  while (!exhausted()) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t ib = order.front(), iw = order.back(),
                      is = order[dim - 1];
    double spread = 0.0;
    for (std::size_t i = 0; i <= dim; ++i) spread = std::max(spread, distance(pts[i], pts[ib]));
    if (spread < xtol && vals[iw] - vals[ib] <= ftol * (1.0 + std::abs(vals[ib]))) break;

    std::vector<double> c(dim, 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == iw) continue;
      for (std::size_t k = 0; k < dim; ++k) c[k] += pts[i][k] / dim;
    }
    const std::vector<double> xr = combine(c, pts[iw], -1.0);
    const double fr = eval(xr);
    if (fr < vals[ib]) {
      if (exhausted()) break;
      const std::vector<double> xe = combine(c, pts[iw], -2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[iw] = xe;
        vals[iw] = fe;
      } else {
        pts[iw] = xr;
        vals[iw] = fr;
      }
      continue;
    }
    if (fr < vals[is]) {
      pts[iw] = xr;
      vals[iw] = fr;
      continue;
    }
    if (exhausted()) break;
    const bool outside = fr < vals[iw];
    const std::vector<double> xc =
        outside ? combine(c, xr, 0.5) : combine(c, pts[iw], 0.5);
    const double fc = eval(xc);
    if (outside ? fc <= fr : fc < vals[iw]) {
      pts[iw] = xc;
      vals[iw] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= dim && !exhausted(); ++i) {
      if (i == ib) continue;
      pts[i] = combine(pts[ib], pts[i], 0.5);
      vals[i] = eval(pts[i]);
    }
  }
  return res;
}

SearchResult residual_minimize(const ShapeFamily& family, double we,
                               int budget, std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("residual_minimize: budget must be >= 1");
  if (!(we > 0.0)) throw std::invalid_argument("residual_minimize: We must be positive");

  {
    // Reject an inadmissible start before spending any budget; ShapeError
    // propagates with the failing invariant.
    const CrossSection start = family.build(family.initial);
    if (family.require_thick && geometry::geometry_report_fixed(start).delta < 0.0) {
      throw ShapeError("thick", "residual_minimize: starting shape is thin");
    }
  }

  SearchResult result;
  result.family = family;
  result.we = we;
  result.budget = budget;
  result.seed = seed;
  std::optional<ShapeEvaluation> best_eval;
  double best_value = std::numeric_limits<double>::infinity();

  const auto objective = [&](const std::vector<double>& p) {
    EvaluationRecord rec;
    rec.params = p;
    const double dist = distance(p, family.initial);
    try {
      const CrossSection shape = family.build(p);
      if (family.require_thick) {
        const double delta = geometry::geometry_report_fixed(shape).delta;
        if (delta < 0.0) {
          rec.objective = kPenalty * (1.0 + dist - delta);
          rec.note = "thin";
          result.log.push_back(rec);
          return rec.objective;
        }
      }
      const ShapeEvaluation ev = evaluate_shape(shape, we);
      rec.admissible = true;
      rec.objective = ev.report.dyn_residual_l2;
      rec.W = ev.W;
      rec.lambda = ev.lambda;
      rec.dyn_residual_l2 = ev.report.dyn_residual_l2;
      rec.dyn_residual_max = ev.report.dyn_residual_max;
      rec.identity15_gap = ev.report.identity15_gap;
      rec.max_principle_violation = ev.report.max_principle_violation;
      if (rec.objective < best_value) {
        best_value = rec.objective;
        best_eval = ev;
        result.best_params = p;
        result.best_shape = shape;
      }
    } catch (const ShapeError& e) {
      rec.objective = kPenalty * (2.0 + dist);
      rec.note = e.invariant();
    } catch (const SolverError&) {
      rec.objective = kPenalty * (2.0 + dist);
      rec.note = "solver";
    }
    result.log.push_back(rec);
    return rec.objective;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> steps(family.initial.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    double base = 0.02;
    if (i == 0) base = 0.05;
    if (family.kind == FamilyKind::Ellipse && i == 1) base = 0.2;
    const double mag = base * (0.5 + unit(rng));
    steps[i] = unit(rng) < 0.5 ? -mag : mag;
  }

  nelder_mead(objective, family.initial, steps, budget);
  if (!best_eval) {
    throw std::invalid_argument("residual_minimize: starting parameters are "
                                "inadmissible (" + result.log.front().note + ")");
  }
  result.W = best_eval->W;
  result.lambda = best_eval->lambda;
  result.report = best_eval->report;
  return result;
}

std::string evaluation_log_csv(const SearchResult& result) {
  std::ostringstream os;
  os << "eval";
  for (const auto& name : result.family.parameter_names()) os << ',' << name;
  os << ",admissible,objective,W,lambda,dyn_residual_l2,dyn_residual_max,"
        "identity15_gap,max_principle_violation,note\n";
  for (std::size_t i = 0; i < result.log.size(); ++i) {
    const EvaluationRecord& r = result.log[i];
    os << i;
    for (double p : r.params) os << ',' << fmt(p);
    os << ',' << (r.admissible ? 1 : 0) << ',' << fmt(r.objective) << ','
       << fmt(r.W) << ',' << fmt(r.lambda) << ',' << fmt(r.dyn_residual_l2)
       << ',' << fmt(r.dyn_residual_max) << ',' << fmt(r.identity15_gap) << ','
       << fmt(r.max_principle_violation) << ',' << r.note << '\n';
  }
  return os.str();
}

}  // namespace bubblering::stream
