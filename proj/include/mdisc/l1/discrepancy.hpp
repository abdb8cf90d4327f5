#pragma once

#include <cmath>
#include <stdexcept>

#include "mdisc/core/norms.hpp"
#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/core/point_set.hpp"

namespace mdisc {

/// Finer reference rule for L1 norms: |f| is not a polynomial, so the
/// product-exact grid of the system is refined `refine` times per axis.
/// Discrete domains keep their own (exact) rule.
inline Quadrature l1_reference_quadrature(const OrthonormalSystem& system, int refine = 4) {
  if (refine < 1) throw std::invalid_argument("l1_reference_quadrature: refine must be positive");
  const Quadrature& q = system.quadrature();
  if (!q.is_tensor_grid() || refine == 1) return q;
  std::vector<int> sizes = q.per_axis();
  for (int& s : sizes) s *= refine;
  return Quadrature::tensor(sizes);
}

namespace detail {
inline double abs_pow_sum(const Eigen::VectorXd& weights, const Eigen::VectorXd& values, double q) {
  if (q == 1.0) return weights.dot(values.cwiseAbs());
  if (q == 2.0) return weights.dot(values.cwiseAbs2());
  return weights.dot(values.cwiseAbs().array().pow(q).matrix());
}
inline void check_discrepancy_exponent(double q) {
  if (!(q >= 1.0) || std::isinf(q)) throw std::invalid_argument("discrepancy: exponent must lie in [1, inf)");
}
}  // namespace detail

/// L^q_z(f) = sum_j lambda_j |f(x^j)|^q - |f|_q^q with lambda_j = 1/m for
/// unweighted z and |f|_q computed on `quad`.
inline double discrepancy(const Eigen::VectorXd& values_at_z, const PointSet& z, const Eigen::VectorXd& values_at_quad,
                          const Quadrature& quad, double q) {
  detail::check_discrepancy_exponent(q);
  if (z.size() == 0) throw std::invalid_argument("discrepancy: empty point set");
  return detail::abs_pow_sum(z.effective_weights(), values_at_z, q) -
         detail::abs_pow_sum(quad.weights(), values_at_quad, q);
}

inline double discrepancy(const OrthonormalSystem& system, const Eigen::VectorXd& coeffs, const PointSet& z, double q,
                          const Quadrature& quad) {
  detail::check_discrepancy_exponent(q);
  return discrepancy(system.evaluate(z.points()) * coeffs, z, system.evaluate(quad.nodes()) * coeffs, quad, q);
}

inline double discrepancy(const OrthonormalSystem& system, const Eigen::VectorXd& coeffs, const PointSet& z, double q) {
  return discrepancy(system, coeffs, z, q, l1_reference_quadrature(system));
}

inline double discrepancy(const TrigPolynomial& f, const PointSet& z, double q, const Quadrature& quad) {
  detail::check_discrepancy_exponent(q);
  return discrepancy(f.evaluate(z.points()).cwiseAbs(), z, f.evaluate(quad.nodes()).cwiseAbs(), quad, q);
}

inline double discrepancy(const TrigPolynomial& f, const PointSet& z, double q) {
  return discrepancy(f, z, q, quadrature_for(f.support(), 16));
}

}  // namespace mdisc
