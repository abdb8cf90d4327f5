#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/core/random.hpp"
#include "mdisc/l1/discrepancy.hpp"

namespace mdisc {

struct L1Targets {
  double low = 0.5;
  double high = 1.5;
};

struct L1Effort {
  int restarts = 200;
  int iterations = 500;
  int holes = 8;               // deep holes used as Dirichlet-kernel centres
  std::uint64_t seed = 0;
  int refine = 4;              // reference quadrature refinement
};

/// One-sided evidence about R(f) = [sum_j lambda_j |f(xi^j)|] / |f|_1 on the
/// span of the system. A ratio outside the targets is a conclusive violation;
/// passing only means the search found none.
struct L1Certificate {
  double r_min = std::numeric_limits<double>::infinity();
  double r_max = 0.0;
  Eigen::VectorXd argmin, argmax;
  L1Targets targets;
  bool pass = false;
  long long evaluations = 0;
  int candidates = 0;
  int restarts = 0;
  int iterations = 0;
};

namespace detail {

class RatioObjective {
public:
  RatioObjective(Eigen::MatrixXd at_z, Eigen::VectorXd wz, Eigen::MatrixXd at_q, Eigen::VectorXd wq)
      : az_(std::move(at_z)), wz_(std::move(wz)), aq_(std::move(at_q)), wq_(std::move(wq)) {}

  // R(b); keeps the products A b for a following gradient() call.
  double value(const Eigen::VectorXd& b) {
    ++evaluations;
    vz_.noalias() = az_ * b;
    vq_.noalias() = aq_ * b;
    den_ = wq_.dot(vq_.cwiseAbs());
    if (!(den_ > 0.0)) return r_ = std::numeric_limits<double>::quiet_NaN();
    return r_ = wz_.dot(vz_.cwiseAbs()) / den_;
  }

  // Subgradient of R at the point of the last value() call.
  Eigen::VectorXd gradient() const {
    const Eigen::VectorXd gn = az_.transpose() * wz_.cwiseProduct(vz_.array().sign().matrix());
    const Eigen::VectorXd gd = aq_.transpose() * wq_.cwiseProduct(vq_.array().sign().matrix());
    return (gn - r_ * gd) / den_;
  }

  long long evaluations = 0;

private:
  Eigen::MatrixXd az_;
  Eigen::VectorXd wz_;
  Eigen::MatrixXd aq_;
  Eigen::VectorXd wq_;
  Eigen::VectorXd vz_, vq_;
  double den_ = 0.0, r_ = 0.0;
};

// Projected subgradient walk on the unit sphere; sense = +1 minimises, -1 maximises.
inline double sphere_descent(RatioObjective& obj, Eigen::VectorXd& b, int iterations, double sense) {
  b.normalize();
  double r = obj.value(b);
  if (std::isnan(r)) return r;
  Eigen::VectorXd g = sense * obj.gradient();
  double step = 0.5;
  int stalled = 0;
  for (int it = 0; it < iterations && step > 1e-9; ++it) {
    Eigen::VectorXd dir = g - g.dot(b) * b;
    const double gn = dir.norm();
    if (gn < 1e-14) break;
    Eigen::VectorXd trial = (b - step * dir / gn).normalized();
    const double rt = obj.value(trial);
    if (!std::isnan(rt) && sense * rt < sense * r) {
      stalled = std::abs(rt - r) <= 1e-12 * std::abs(r) ? stalled + 1 : 0;
      b = std::move(trial);
      r = rt;
      g = sense * obj.gradient();
      step = std::min(1.0, step * 1.5);
      if (stalled >= 20) break;
    } else {
      step *= 0.5;
    }
  }
  return r;
}

// Nodes of `grid` farthest (torus sup-distance) from every knot of z.
inline std::vector<Eigen::Index> deep_holes(const PointMatrix& grid, const PointMatrix& z, int count) {
  Eigen::VectorXd dist(grid.rows());
  for (Eigen::Index i = 0; i < grid.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < z.rows() && best > 0.0; ++j) {
      double d = 0.0;
      for (Eigen::Index c = 0; c < grid.cols(); ++c) {
        const double t = std::abs(grid(i, c) - z(j, c));
        d = std::max(d, std::min(t, kTwoPi - t));
      }
      best = std::min(best, d);
    }
    dist(i) = best;
  }
  return top_indices(dist, count);
}

}  // namespace detail

/// Falsification search for the extremal L1 ratios of a point set: first the
/// deterministic candidates (basis functions, the Dirichlet kernel centred at
/// each knot and at deep holes, extremal eigenvectors of the sampling matrix),
/// then projected subgradient walks on the coefficient sphere from Gaussian
/// starts, each restart run once towards the minimum and once towards the maximum.
inline L1Certificate certify_l1(const PointSet& z, const OrthonormalSystem& system, L1Targets targets = {},
                                L1Effort effort = {}) {
  if (z.size() == 0) throw std::invalid_argument("certify_l1: empty point set");
  if (z.dim() != system.dim()) throw std::invalid_argument("certify_l1: point dimension mismatch");
  if (effort.restarts < 0 || effort.iterations < 0) throw std::invalid_argument("certify_l1: negative effort");
  const Quadrature ref = l1_reference_quadrature(system, effort.refine);
  const Eigen::MatrixXd uz = system.evaluate(z.points());
  const Eigen::VectorXd wz = z.effective_weights();
  detail::RatioObjective obj(uz, wz, system.evaluate(ref.nodes()), ref.weights());

  L1Certificate cert;
  cert.targets = targets;
  auto record = [&](const Eigen::VectorXd& b, double r) {
    if (std::isnan(r)) return;
    if (r < cert.r_min) {
      cert.r_min = r;
      cert.argmin = b;
    }
    if (r > cert.r_max) {
      cert.r_max = r;
      cert.argmax = b;
    }
  };
  auto try_candidate = [&](Eigen::VectorXd b) {
    if (b.norm() == 0.0) return;
    b.normalize();
    ++cert.candidates;
    record(b, obj.value(b));
  };

  const Eigen::Index n = system.size();
  for (Eigen::Index i = 0; i < n; ++i) try_candidate(Eigen::VectorXd::Unit(n, i));
  // D(x, y) = sum_i u_i(x) u_i(y) has coefficient vector u(y).
  for (Eigen::Index j = 0; j < uz.rows(); ++j) try_candidate(uz.row(j).transpose());
  if (system.domain() == DomainKind::Torus && effort.holes > 0) {
    const PointMatrix& grid = system.quadrature().nodes();
    for (Eigen::Index h : detail::deep_holes(grid, z.points(), effort.holes))
      try_candidate(system.evaluate(row_span(grid, h)));
  }
  // Extremal eigenvectors of sum lambda_j G(xi^j): the lowest one vanishes on
  // every knot whenever m < N.
  {
    const Eigen::MatrixXd m = uz.transpose() * wz.asDiagonal() * uz;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    try_candidate(es.eigenvectors().col(0));
    try_candidate(es.eigenvectors().col(n - 1));
  }

  Rng rng(effort.seed);
  for (int r = 0; r < effort.restarts; ++r) {
    const Eigen::VectorXd start = gaussian_vector(n, rng);
    for (double sense : {1.0, -1.0}) {
      Eigen::VectorXd b = start;
      record(b, detail::sphere_descent(obj, b, effort.iterations, sense));
    }
  }
  cert.restarts = effort.restarts;
  cert.iterations = effort.iterations;
  cert.evaluations = obj.evaluations;
  cert.pass = cert.r_min >= targets.low && cert.r_max <= targets.high;
  return cert;
}

}  // namespace mdisc
