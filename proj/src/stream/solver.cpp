#include "bubblering/stream/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "bubblering/errors.hpp"
#include "bubblering/stream/kernel.hpp"

namespace bubblering::stream {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kLog4 = std::log(4.0);

// Weights R_j(t_i) depend only on (i - j) mod N.
std::vector<double> log_weight_table(int N) {
  std::vector<double> table(N);
  for (int d = 0; d < N; ++d) table[d] = log_weight(N, 0, kTwoPi * d / N);
  return table;
}

// ln(4 sin^2((t - tau)/2)); callers guarantee t != tau mod 2pi.
double log_sin2(double diff) {
  const double s = 2.0 * std::sin(0.5 * diff);
  return std::log(s * s);
}

// Smooth part of G at coincident points:
//   lim [G + (A/2) ln(4 sin^2)] = r/(2pi) [ln(4 r^2/|x'|^2)/2 + ln 4 - 2].
double single_diagonal(double r, double speed) {
  return r / kTwoPi *
         (0.5 * std::log(4.0 * r * r / (speed * speed)) + kLog4 - 2.0);
}

// Same limit for the normal-derivative kernel.
double normal_diagonal(double r, double nr, double curvature, double speed) {
  return nr / (8.0 * kPi) * std::log(4.0 * r * r / (speed * speed)) -
         r * curvature / (4.0 * kPi) + nr * (kLog4 - 1.0) / (4.0 * kPi);
}

void require_smooth(const CrossSection& shape) {
  if (!shape.is_smooth()) {
    throw UnsupportedShapeError(
        "the boundary solver needs a smooth cross-section, got " +
        shape.kind_name());
  }
}

}  // namespace

double log_weight(int N, int j, double t) {
  const int n = N / 2;
  const double diff = t - kTwoPi * j / N;
  double sum = 0.0;
  for (int m = 1; m < n; ++m) sum += std::cos(m * diff) / m;
  return -kTwoPi / n * sum - kPi / (double(n) * n) * std::cos(n * diff);
}

BoundaryOperator::BoundaryOperator(const CrossSection& shape)
    : shape_(shape), n_(shape.resolution()) {
  require_smooth(shape);
  nodes_ = geometry::boundary_nodes(shape_);
  const int N = n_;
  const double h = kTwoPi / N;
  const std::vector<double> R = log_weight_table(N);

  single_.resize(N, N);
  normal_.resize(N, N);
  for (int i = 0; i < N; ++i) {
    const Point xi = nodes_.position[i];
    const Point ni = nodes_.normal[i];
    for (int j = 0; j < N; ++j) {
      const double sp = nodes_.speed[j];
      const double Rij = R[(i - j + N) % N];
      if (i == j) {
        const double A = xi.r / kTwoPi;
        const double dnA = ni.r / (4.0 * kPi);
        single_(i, j) = (-0.5 * A * Rij + h * single_diagonal(xi.r, sp)) * sp;
        normal_(i, j) =
            (-0.5 * dnA * Rij +
             h * normal_diagonal(xi.r, ni.r, nodes_.curvature[i], sp)) *
            sp;
        continue;
      }
      const KernelTerms kt = kernel_terms(nodes_.position[j], xi, ni);
      const double ls = log_sin2(h * (i - j));
      single_(i, j) =
          (-0.5 * kt.log_coeff * Rij + h * (kt.g + 0.5 * kt.log_coeff * ls)) *
          sp;
      normal_(i, j) = (-0.5 * kt.dn_log_coeff * Rij +
                       h * (kt.dn_g + 0.5 * kt.dn_log_coeff * ls)) *
                      sp;
    }
  }

  // Bordered system [S -1; w^T 0] [sigma; gamma] = [data; circulation].
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N + 1, N + 1);
  M.topLeftCorner(N, N) = single_;
  M.topRightCorner(N, 1).setConstant(-1.0);
  for (int j = 0; j < N; ++j) M(N, j) = nodes_.weight[j];
  lu_.compute(M);
  const double rc = lu_.rcond();
  condition_ = rc > 0.0 ? 1.0 / rc : INFINITY;
  if (!(condition_ <= kMaxCondition)) {
    std::ostringstream msg;
    msg << "single-layer system ill-conditioned: condition estimate "
        << condition_ << " at resolution " << N;
    throw SolverError(msg.str());
  }
}

BoundarySolution BoundaryOperator::build(const Eigen::VectorXd& sigma,
                                         double gamma,
                                         const Eigen::VectorXd& data) const {
  const int N = n_;
  const Eigen::VectorXd psi = single_ * sigma;
  const Eigen::VectorXd pv = normal_ * sigma;

  BoundarySolution sol;
  sol.resolution = N;
  sol.nodes = nodes_;
  sol.gamma = gamma;
  sol.condition_estimate = condition_;
  sol.density.assign(sigma.data(), sigma.data() + N);
  sol.psi_trace.assign(psi.data(), psi.data() + N);
  sol.dn_psi.resize(N);
  double circ = 0.0;
  double trace_err = 0.0;
  for (int i = 0; i < N; ++i) {
    const double r = nodes_.position[i].r;
    sol.dn_psi[i] = -0.5 * r * sigma(i) + pv(i);
    circ -= sol.dn_psi[i] / r * nodes_.weight[i];
    trace_err = std::max(trace_err, std::abs(psi(i) - data(i) - gamma));
  }
  sol.circulation = circ;
  sol.trace_error = trace_err;
  return sol;
}

BoundarySolution BoundaryOperator::finish(const Eigen::VectorXd& rhs,
                                          double circulation) const {
  const Eigen::VectorXd x = lu_.solve(rhs);
  BoundarySolution sol = build(x.head(n_), x(n_), rhs.head(n_));
  sol.circulation_target = circulation;
  return sol;
}

BoundarySolution BoundaryOperator::from_density(std::span<const double> density,
                                                double W, double gamma) const {
  if (static_cast<int>(density.size()) != n_) {
    throw std::invalid_argument("from_density: expected " +
                                std::to_string(n_) + " density values");
  }
  Eigen::VectorXd sigma(n_), data(n_);
  for (int i = 0; i < n_; ++i) {
    sigma(i) = density[i];
    const double r = nodes_.position[i].r;
    data(i) = 0.5 * W * r * r;
  }
  BoundarySolution sol = build(sigma, gamma, data);
  sol.W = W;
  sol.circulation_target = sol.circulation;
  return sol;
}

BoundarySolution BoundaryOperator::solve(double W, double circulation) const {
  if (!std::isfinite(W) || !std::isfinite(circulation)) {
    throw std::invalid_argument("solve: W and circulation must be finite");
  }
  Eigen::VectorXd rhs(n_ + 1);
  for (int i = 0; i < n_; ++i) {
    const double r = nodes_.position[i].r;
    rhs(i) = 0.5 * W * r * r;
  }
  rhs(n_) = circulation;
  BoundarySolution sol = finish(rhs, circulation);
  sol.W = W;
  return sol;
}

BoundarySolution BoundaryOperator::solve_with_data(std::span<const double> data,
                                                   double circulation) const {
  if (static_cast<int>(data.size()) != n_) {
    throw std::invalid_argument("solve_with_data: expected " +
                                std::to_string(n_) + " data values");
  }
  Eigen::VectorXd rhs(n_ + 1);
  for (int i = 0; i < n_; ++i) rhs(i) = data[i];
  rhs(n_) = circulation;
  return finish(rhs, circulation);
}

double BoundaryOperator::boundary_value(const BoundarySolution& sol,
                                        double t) const {
  const int N = n_;
  const double h = kTwoPi / N;
  const geometry::CurveSample s = shape_.sample(t);
  const Point x = s.x;
  double psi = 0.0;
  for (int j = 0; j < N; ++j) {
    const double sp = nodes_.speed[j];
    const double Rj = log_weight(N, j, t);
    const double diff = t - h * j;
    if (std::abs(std::remainder(diff, kTwoPi)) < 1e-14) {
      const double A = x.r / kTwoPi;
      psi += (-0.5 * A * Rj + h * single_diagonal(x.r, sp)) * sp *
             sol.density[j];
      continue;
    }
    const KernelTerms kt = kernel_terms(nodes_.position[j], x, {1.0, 0.0});
    psi += (-0.5 * kt.log_coeff * Rj +
            h * (kt.g + 0.5 * kt.log_coeff * log_sin2(diff))) *
           sp * sol.density[j];
  }
  return psi;
}

BoundarySolution solve_dirichlet(const CrossSection& shape, double W) {
  require_smooth(shape);
  int N = shape.resolution();
  double last_gap = INFINITY;
  while (true) {
    const BoundaryOperator op(shape.with_resolution(N));
    BoundarySolution sol = op.solve(W, 1.0);
    last_gap = std::abs(sol.circulation - sol.circulation_target);
    if (last_gap <= kSolverTolerance) return sol;
    if (2 * N > kMaxSolverResolution) break;
    N *= 2;
  }
  std::ostringstream msg;
  msg << "solve_dirichlet: circulation mismatch " << last_gap
      << " still above " << kSolverTolerance << " at resolution " << N;
  throw SolverError(msg.str());
}

double exterior_psi(const BoundarySolution& sol, Point x) {
  if (x.r == 0.0) return 0.0;
  double psi = 0.0;
  for (std::size_t j = 0; j < sol.nodes.size(); ++j) {
    psi += ring_kernel(sol.nodes.position[j], x) * sol.density[j] *
           sol.nodes.weight[j];
  }
  return psi;
}

}  // namespace bubblering::stream
