#pragma once

#include <stdexcept>
#include <utility>

#include "mdisc/dictionaries/builders.hpp"
#include "mdisc/greedy/rga.hpp"
#include "mdisc/l2/spectral.hpp"

namespace mdisc {

struct FrobeniusRgaResult {
  PointSet points;
  SpectralCertificate certificate;
  std::vector<double> residuals;  // |(1/k) sum_{j<=k} G(xi^j) - I|_F, k = 1..m
  std::vector<Eigen::Index> indices;
};

/// RGA in the Frobenius space over D^u = {G(x)/(N t^2)} restricted to the
/// candidate nodes. I/(N t^2) is the average of the atoms whenever the nodes
/// integrate products u_i u_j exactly, so the run satisfies
/// |(1/m) sum G(xi^k) - I|_F <= 2 N t^2 / sqrt(m).
inline FrobeniusRgaResult frobenius_rga_identity(const OrthonormalSystem& system, int m, const PointMatrix& nodes) {
  const auto& c = system.constants();
  if (!c.t) throw std::invalid_argument("frobenius_rga_identity: condition E constant t is not declared");
  if (m < 1) throw std::invalid_argument("frobenius_rga_identity: m must be at least 1");
  const RealDictionary dict = build_matrix_dict(system, nodes);
  const Eigen::Index n = system.size();
  const double nt2 = static_cast<double>(n) * (*c.t) * (*c.t);
  Eigen::VectorXd target = Eigen::VectorXd::Zero(n * n);
  for (Eigen::Index i = 0; i < n; ++i) target(i * n + i) = 1.0 / nt2;
  const GreedyRun<double> run = rga(target, dict, m);

  FrobeniusRgaResult out;
  PointMatrix pts(m, system.dim());
  for (int k = 0; k < m; ++k) pts.row(k) = nodes.row(run.indices[static_cast<std::size_t>(k)]);
  out.points = PointSet(std::move(pts));
  for (double r : run.residual_norms) out.residuals.push_back(r * nt2);
  out.indices = run.indices;
  out.certificate = certify_l2(system, out.points);
  return out;
}

inline FrobeniusRgaResult frobenius_rga_identity(const OrthonormalSystem& system, int m, const DeltaNet& net) {
  return frobenius_rga_identity(system, m, net.nodes);
}

/// Candidate nodes default to the quadrature nodes of the system.
inline FrobeniusRgaResult frobenius_rga_identity(const OrthonormalSystem& system, int m) {
  return frobenius_rga_identity(system, m, system.quadrature().nodes());
}

}  // namespace mdisc
