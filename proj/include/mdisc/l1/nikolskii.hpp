#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "mdisc/core/norms.hpp"
#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/core/random.hpp"
#include "mdisc/core/trig_polynomial.hpp"

namespace mdisc {

struct NikolskiiReport {
  int samples = 0;
  double max_ratio = 0.0;        // max |f|_inf / |f|_1
  double bound = 0.0;            // |Q|
  int violations = 0;
  double dirichlet_ratio = 0.0;  // |D_Q|_inf / |D_Q|_1
  std::optional<double> k3_needed;  // max |f|_inf / (N^{K4/p} |f|_p), general systems
};

/// Checks |f|_inf <= |Q| |f|_1 on T(Q) for `samples` random polynomials with
/// complex Gaussian coefficients, plus the Dirichlet kernel itself.
inline NikolskiiReport nikolskii_check(const FrequencySet& q, int samples, std::uint64_t seed = 0) {
  if (samples < 1) throw std::invalid_argument("nikolskii_check: sample size must be at least 1");
  const Quadrature quad = quadrature_for(q, 16);
  const Eigen::MatrixXcd e = exponential_matrix(q, quad.nodes());
  NikolskiiReport rep;
  rep.samples = samples;
  rep.bound = static_cast<double>(q.size());
  auto ratio = [&](const Eigen::VectorXcd& c) {
    const Eigen::VectorXd v = (e * c).cwiseAbs();
    const TrigPolynomial f(q, c);
    const double sup = sup_norm([&](std::span<const double> x) { return std::abs(f(x)); }, quad, v);
    return sup / quad.weights().dot(v);
  };
  const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(q.size()));
  rep.dirichlet_ratio = ratio(ones);
  rep.max_ratio = rep.dirichlet_ratio;
  if (rep.dirichlet_ratio > rep.bound * (1 + 1e-12)) ++rep.violations;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const double r = ratio(complex_gaussian_vector(static_cast<Eigen::Index>(q.size()), rng));
    rep.max_ratio = std::max(rep.max_ratio, r);
    if (r > rep.bound * (1 + 1e-12)) ++rep.violations;
  }
  return rep;
}

/// Empirical constant in |f|_inf <= K3 N^{K4/p} |f|_p over random elements of
/// the span of a system (K4 from the system, 1 when undeclared). Also tracks
/// |f|_inf / |f|_1 against N t^2, which follows from condition E through
/// |f|_2^2 <= |f|_inf |f|_1.
inline NikolskiiReport nikolskii_check(const OrthonormalSystem& system, int samples, double p = 2.0,
                                       std::uint64_t seed = 0) {
  if (samples < 1) throw std::invalid_argument("nikolskii_check: sample size must be at least 1");
  check_exponent(p);
  if (std::isinf(p)) throw std::invalid_argument("nikolskii_check: p must be finite");
  const double k4 = system.constants().K4.value_or(1.0);
  const double n = system.size();
  NikolskiiReport rep;
  rep.samples = samples;
  const double t = system.constants().t.value_or(1.0);
  rep.bound = n * t * t;
  Rng rng(seed);
  double k3 = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Eigen::VectorXd b = gaussian_vector(system.size(), rng);
    const Eigen::VectorXd v = system.node_values() * b;
    const double sup = system.norm_inf(b);
    const double l1 = lp_norm(v, system.quadrature().weights(), 1.0);
    const double lp = lp_norm(v, system.quadrature().weights(), p);
    rep.max_ratio = std::max(rep.max_ratio, sup / l1);
    if (sup / l1 > rep.bound * (1 + 1e-12)) ++rep.violations;
    k3 = std::max(k3, sup / (std::pow(n, k4 / p) * lp));
  }
  rep.k3_needed = k3;
  return rep;
}

}  // namespace mdisc
