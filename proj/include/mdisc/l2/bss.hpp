#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/l2/spectral.hpp"

namespace mdisc {

struct BssStep {
  Eigen::Index index = 0;
  double weight = 0.0;
  double lower = 0.0, upper = 0.0;                  // barriers after the step
  double lower_potential = 0.0, upper_potential = 0.0;
  double lambda_min = 0.0, lambda_max = 0.0;        // of A after the step
};

struct BssResult {
  PointSet points;              // support points with weights, lower constant 1
  SpectralCertificate certificate;
  std::vector<Eigen::Index> support;  // indices into the domain nodes
  double ratio_bound = 0.0;     // (d + 1 + 2 sqrt d) / (d + 1 - 2 sqrt d)
  double eps_lower = 0.0, eps_upper = 0.0;
  std::vector<BssStep> steps;
};

inline double bss_ratio_bound(double d) {
  if (!(d > 1.0)) throw std::invalid_argument("bss: d must exceed 1");
  const double s = std::sqrt(d);
  return (d + 1.0 + 2.0 * s) / (d + 1.0 - 2.0 * s);
}

/// Barrier sparsification of the decomposition sum_j v_j v_j^T = I with
/// v_j = sqrt(mu_j) u(x^j) over a discrete domain. Uses ceil(dN) rank-one
/// steps with barrier shifts delta_L = 1, delta_U = (sqrt d + 1)/(sqrt d - 1).
inline BssResult bss_weighted_sparsify(const OrthonormalSystem& system, double d) {
  const double ratio = bss_ratio_bound(d);
  if (system.domain() != DomainKind::Discrete)
    throw std::invalid_argument("bss_weighted_sparsify: system must live on a finite domain");
  const auto& quad = system.quadrature();
  const Eigen::Index big_m = quad.size();
  const Eigen::Index n = system.size();
  if (big_m < n) throw std::invalid_argument("bss_weighted_sparsify: domain has fewer points than N");

  const Eigen::Index steps = static_cast<Eigen::Index>(std::ceil(d * static_cast<double>(n) - 1e-9));
  BssResult out;
  out.ratio_bound = ratio;
  const Eigen::MatrixXd& u = system.node_values();
  const Eigen::VectorXd& mu = quad.weights();
  Eigen::VectorXd s = Eigen::VectorXd::Zero(big_m);

  if (big_m <= steps) {
    s = Eigen::VectorXd::Ones(big_m);
  } else {
    const double sd = std::sqrt(d);
    const double nd = static_cast<double>(n);
    const double delta_l = 1.0;
    const double delta_u = (sd + 1.0) / (sd - 1.0);
    double l = -nd * sd;
    double up = nd * (d + sd) / (sd - 1.0);
    out.eps_lower = nd / (-l);
    out.eps_upper = nd / up;
    // Columns v_j.
    const Eigen::MatrixXd v = (u.array().colwise() * mu.array().sqrt()).matrix().transpose();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index step = 0; step < steps; ++step) {
      const double l2 = l + delta_l;
      const double u2 = up + delta_u;
      const Eigen::MatrixXd lo_old = (a - l * id).inverse();
      const Eigen::MatrixXd lo = (a - l2 * id).inverse();
      const Eigen::MatrixXd hi_old = (up * id - a).inverse();
      const Eigen::MatrixXd hi = (u2 * id - a).inverse();
      const double dphi_l = lo.trace() - lo_old.trace();
      const double dphi_u = hi_old.trace() - hi.trace();
      const Eigen::MatrixXd lo_v = lo * v;
      const Eigen::MatrixXd hi_v = hi * v;
      // L_A(v) = v^T (A - l'I)^{-2} v / dphi_l - v^T (A - l'I)^{-1} v
      // U_A(v) = v^T (u'I - A)^{-2} v / dphi_u + v^T (u'I - A)^{-1} v
      const Eigen::VectorXd lq = lo_v.colwise().squaredNorm().transpose() / dphi_l -
                                 (v.cwiseProduct(lo_v)).colwise().sum().transpose();
      const Eigen::VectorXd uq = hi_v.colwise().squaredNorm().transpose() / dphi_u +
                                 (v.cwiseProduct(hi_v)).colwise().sum().transpose();
      Eigen::Index j = 0;
      (lq - uq).maxCoeff(&j);
      if (lq(j) - uq(j) < -1e-9 * std::max(1.0, std::abs(uq(j))) || !(uq(j) > 0.0))
        throw std::logic_error("bss_weighted_sparsify: no admissible rank-one update");
      const double tau = 0.5 * (lq(j) + uq(j));
      const double w = 1.0 / tau;
      s(j) += w;
      a += w * v.col(j) * v.col(j).transpose();
      l = l2;
      up = u2;
      BssStep rec;
      rec.index = j;
      rec.weight = w;
      rec.lower = l;
      rec.upper = up;
      rec.lower_potential = (a - l * id).inverse().trace();
      rec.upper_potential = (up * id - a).inverse().trace();
      const auto ev = extremal_eigenvalues(a);
      rec.lambda_min = ev.min;
      rec.lambda_max = ev.max;
      out.steps.push_back(rec);
    }
  }

  // Discretization weights s_j mu_j, rescaled so that lambda_min = 1.
  std::vector<Eigen::Index> support;
  for (Eigen::Index j = 0; j < big_m; ++j)
    if (s(j) != 0.0) support.push_back(j);
  const auto k = static_cast<Eigen::Index>(support.size());
  PointMatrix pts(k, system.dim());
  Eigen::VectorXd w(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    pts.row(i) = quad.nodes().row(support[static_cast<std::size_t>(i)]);
    w(i) = s(support[static_cast<std::size_t>(i)]) * mu(support[static_cast<std::size_t>(i)]);
  }
  const Eigen::MatrixXd um = system.evaluate(pts);
  const double lmin = extremal_eigenvalues(um.transpose() * w.asDiagonal() * um).min;
  if (!(lmin > 0.0)) throw std::logic_error("bss_weighted_sparsify: sparsified matrix is singular");
  w /= lmin;
  out.points = PointSet(std::move(pts), std::move(w));
  out.support = std::move(support);
  out.certificate = certify_l2(system, out.points);
  return out;
}

}  // namespace mdisc
