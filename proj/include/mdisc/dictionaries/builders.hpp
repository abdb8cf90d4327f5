#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "mdisc/core/frequency_set.hpp"
#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/core/point_set.hpp"
#include "mdisc/core/trig_polynomial.hpp"
#include "mdisc/dictionaries/delta_net.hpp"
#include "mdisc/dictionaries/dictionary.hpp"

// Dictionaries for T(Q) live in the coefficient space C^{|Q|} (Parseval makes
// the coefficient inner product the L2 one). Dictionaries for a real system
// live in R^N, the coefficients b of f = sum_i b_i u_i.

namespace mdisc {

using ComplexDictionary = FiniteDictionary<cplx>;
using RealDictionary = FiniteDictionary<double>;

/// Shifts w_Q(x - y) for y over the rows of `shifts`.
inline ComplexDictionary build_shifted_kernel_dict(const FrequencySet& q, const PointMatrix& shifts,
                                                   DictionaryKind kind = DictionaryKind::ShiftedKernelGrid) {
  if (q.empty()) throw std::invalid_argument("build_shifted_kernel_dict: empty frequency set");
  if (shifts.cols() != q.dim()) throw std::invalid_argument("build_shifted_kernel_dict: shift dimension mismatch");
  const double scale = 1.0 / std::sqrt(static_cast<double>(q.size()));
  Mat<cplx> atoms(static_cast<Eigen::Index>(q.size()), shifts.rows());
  for (Eigen::Index j = 0; j < shifts.rows(); ++j) {
    auto y = row_span(shifts, j);
    for (std::size_t i = 0; i < q.size(); ++i)
      atoms(static_cast<Eigen::Index>(i), j) = scale * std::polar(1.0, -phase(q[i], y));
  }
  return ComplexDictionary(kind, std::move(atoms), Symmetry::Phase, shifts);
}

/// D^2(Q) over the grid P(N); requires Q inside Pi(N). |D^2(Q)| = theta(N).
inline ComplexDictionary build_shifted_kernel_dict(const FrequencySet& q, std::span<const int> box) {
  if (!q.within_box(box))
    throw std::invalid_argument("build_shifted_kernel_dict: Q is not contained in Pi(N) of the grid");
  return build_shifted_kernel_dict(q, grid_P(box).points());
}

inline ComplexDictionary build_shifted_kernel_dict(const FrequencySet& q, const DeltaNet& net) {
  if (net.dim() != q.dim()) throw std::invalid_argument("build_shifted_kernel_dict: net dimension mismatch");
  return build_shifted_kernel_dict(q, net.nodes);
}

/// D^T(Q) = {e^{i(k,x)}}: the coordinate vectors of C^{|Q|}.
inline ComplexDictionary build_exponential_dict(const FrequencySet& q) {
  const auto n = static_cast<Eigen::Index>(q.size());
  if (n == 0) throw std::invalid_argument("build_exponential_dict: empty frequency set");
  return ComplexDictionary(DictionaryKind::Exponentials, Mat<cplx>::Identity(n, n), Symmetry::Phase);
}

/// D^3(Q) = D^2(Q) u D^T(Q).
inline ComplexDictionary build_union_dict(const FrequencySet& q, std::span<const int> box) {
  return union_dictionary(build_shifted_kernel_dict(q, box), build_exponential_dict(q));
}

inline double kernel_scale(const OrthonormalSystem& system) {
  const auto& c = system.constants();
  if (!c.K2) throw std::invalid_argument("kernel dictionary: system does not declare K2");
  return 1.0 / std::sqrt(*c.K2 * system.size());
}

/// g_y = (K2 N)^{-1/2} D_N(., y) for y over the given nodes (D^1 for a delta-net).
inline RealDictionary build_kernel_net_dict(const OrthonormalSystem& system, const PointMatrix& nodes) {
  if (nodes.cols() != system.dim()) throw std::invalid_argument("build_kernel_net_dict: node dimension mismatch");
  Mat<double> atoms = system.evaluate(nodes).transpose() * kernel_scale(system);
  return RealDictionary(DictionaryKind::KernelNet, std::move(atoms), Symmetry::Sign, nodes);
}

inline RealDictionary build_kernel_net_dict(const OrthonormalSystem& system, const DeltaNet& net) {
  return build_kernel_net_dict(system, net.nodes);
}

/// D^2 = {+-g_i}, g_i = K2^{-1/2} u_i; the sign is supplied by Symmetry::Sign.
inline RealDictionary build_scaled_basis_dict(const OrthonormalSystem& system) {
  const auto& c = system.constants();
  if (!c.K2) throw std::invalid_argument("build_scaled_basis_dict: system does not declare K2");
  const Eigen::Index n = system.size();
  return RealDictionary(DictionaryKind::ScaledBasis, Mat<double>::Identity(n, n) / std::sqrt(*c.K2),
                        Symmetry::Sign);
}

/// G(x) = u(x) u(x)^T, the rank-one matrix of a point.
inline Eigen::MatrixXd rank_one_matrix(const OrthonormalSystem& system, std::span<const double> x) {
  const Eigen::VectorXd u = system.evaluate(x);
  return u * u.transpose();
}

/// D^u = {G(x)/(N t^2)} over the nodes, each atom flattened column-major into
/// R^{N^2} so the Euclidean inner product is the Frobenius one.
inline RealDictionary build_matrix_dict(const OrthonormalSystem& system, const PointMatrix& nodes) {
  const auto& c = system.constants();
  if (!c.t) throw std::invalid_argument("build_matrix_dict: condition E constant t is not declared");
  if (nodes.cols() != system.dim()) throw std::invalid_argument("build_matrix_dict: node dimension mismatch");
  const Eigen::Index n = system.size();
  const double scale = 1.0 / (static_cast<double>(n) * (*c.t) * (*c.t));
  const Eigen::MatrixXd u = system.evaluate(nodes);
  Mat<double> atoms(n * n, nodes.rows());
  for (Eigen::Index j = 0; j < nodes.rows(); ++j) {
    const Eigen::VectorXd uj = u.row(j).transpose();
    Eigen::Map<Eigen::MatrixXd>(atoms.col(j).data(), n, n) = scale * uj * uj.transpose();
  }
  return RealDictionary(DictionaryKind::MatrixAtoms, std::move(atoms), Symmetry::None, nodes);
}

inline RealDictionary build_matrix_dict(const OrthonormalSystem& system, const DeltaNet& net) {
  return build_matrix_dict(system, net.nodes);
}

}  // namespace mdisc
