#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/core/point_set.hpp"

namespace mdisc {

/// G(x) = u(x) u(x)^T.
inline Eigen::MatrixXd gram_matrix_at(const OrthonormalSystem& system, std::span<const double> x) {
  const Eigen::VectorXd u = system.evaluate(x);
  return u * u.transpose();
}

/// M = sum_k lambda_k G(xi^k), lambda_k = 1/m for unweighted sets.
inline Eigen::MatrixXd sampling_matrix(const OrthonormalSystem& system, const PointSet& ps) {
  if (ps.dim() != system.dim()) throw std::invalid_argument("sampling_matrix: point dimension mismatch");
  const Eigen::MatrixXd u = system.evaluate(ps.points());
  return u.transpose() * ps.effective_weights().asDiagonal() * u;
}

enum class EigenMethod { Auto, Dense, Power };

inline constexpr int kDenseEigenLimit = 512;
inline constexpr double kEigenTolerance = 1e-10;
inline constexpr int kPowerIterationCap = 100000;

struct ExtremalEigenvalues {
  double min = 0.0;
  double max = 0.0;
};

namespace detail {

// Largest eigenvalue of a symmetric positive semidefinite matrix.
inline double power_iteration(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(n, 1.0, 2.0).normalized();
  double lambda = v.dot(a * v);
  for (int it = 0; it < kPowerIterationCap; ++it) {
    Eigen::VectorXd w = a * v;
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    v = w / nw;
    const double next = v.dot(a * v);
    if (std::abs(next - lambda) <= kEigenTolerance * std::max(1.0, std::abs(next))) return next;
    lambda = next;
  }
  return lambda;
}

}  // namespace detail

inline ExtremalEigenvalues extremal_eigenvalues(const Eigen::MatrixXd& m, EigenMethod method = EigenMethod::Auto) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("extremal_eigenvalues: need a nonempty square matrix");
  if (method == EigenMethod::Auto) method = m.rows() <= kDenseEigenLimit ? EigenMethod::Dense : EigenMethod::Power;
  if (method == EigenMethod::Dense) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
  }
  // Gershgorin shift makes both problems positive semidefinite.
  const double shift = m.cwiseAbs().rowwise().sum().maxCoeff();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  const double top = detail::power_iteration(m + shift * id) - shift;
  const double bottom = shift - detail::power_iteration(shift * id - m);
  return {bottom, top};
}

/// Exact L2 constants of a (weighted) point set:
/// (1 - eps)|f|_2^2 <= sum lambda_k f(xi^k)^2 <= (1 + eps)|f|_2^2.
struct SpectralCertificate {
  Eigen::MatrixXd matrix;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double eps = 0.0;
  double frobenius = 0.0;  // |M - I|_F

  double ratio() const { return lambda_min > 0 ? lambda_max / lambda_min : std::numeric_limits<double>::infinity(); }
};

inline SpectralCertificate certify_l2(Eigen::MatrixXd m, EigenMethod method = EigenMethod::Auto) {
  SpectralCertificate c;
  const auto ev = extremal_eigenvalues(m, method);
  c.lambda_min = ev.min;
  c.lambda_max = ev.max;
  c.eps = std::max(std::abs(ev.min - 1.0), std::abs(ev.max - 1.0));
  c.frobenius = (m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).norm();
  c.matrix = std::move(m);
  return c;
}

inline SpectralCertificate certify_l2(const OrthonormalSystem& system, const PointSet& ps,
                                      EigenMethod method = EigenMethod::Auto) {
  return certify_l2(sampling_matrix(system, ps), method);
}

/// sum_k lambda_k f(xi^k)^2 - |f|_2^2 for f = sum_i b_i u_i, evaluated pointwise.
inline double l2_discretization_error(const OrthonormalSystem& system, const PointSet& ps, const Eigen::VectorXd& b) {
  const Eigen::VectorXd w = ps.effective_weights();
  double s = 0.0;
  for (Eigen::Index k = 0; k < ps.size(); ++k) {
    const double v = system.value(b, ps.point(k));
    s += w(k) * v * v;
  }
  return s - b.squaredNorm();
}

}  // namespace mdisc
