#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/dictionaries/builders.hpp"
#include "mdisc/greedy/incremental.hpp"

namespace mdisc {

/// |t|_A = sum |c_i| for t = sum c_i g_i, g_i = K2^{-1/2} u_i; in the u-basis
/// this is K2^{1/2} sum |b_i|.
inline double a_norm(const OrthonormalSystem& system, const Eigen::VectorXd& b) {
  const auto& c = system.constants();
  if (!c.K2) throw std::invalid_argument("a_norm: system does not declare K2");
  return std::sqrt(*c.K2) * b.cwiseAbs().sum();
}

struct SparsifyResult {
  double p = 2.0;
  int m = 0;
  Eigen::VectorXd approximant;  // coefficients of G_m(t) in the u-basis
  double a_norm_input = 0.0;
  double a_norm_output = 0.0;
  double lp_residual = 0.0;
  double sup_residual = 0.0;
  GreedyRun<double> run;        // IA run on t / |t|_A
};

/// p = max(2, round(ln N)).
inline double sparsify_exponent(int n) {
  return std::max(2.0, std::round(std::log(static_cast<double>(n))));
}

namespace detail {

inline void require_condition_c(const OrthonormalSystem& system) {
  const auto& c = system.constants();
  if (!c.K3 || !c.K4) throw std::invalid_argument("sup_norm_sparsify: system does not declare K3 and K4");
  if (!c.K2) throw std::invalid_argument("sup_norm_sparsify: system does not declare K2");
}

}  // namespace detail

/// Sup-norm sparsification: IA(eps) in L_p, p = max(2, round(ln N)), applied to
/// t / |t|_A over D^2 = {+-g_i}. The search runs over the sign-consistent part
/// {sign(b_i) g_i : b_i != 0}, whose convex hull already contains t / |t|_A, so
/// every atom enters with the sign of t and |G_m(t)|_A = |t|_A exactly.
/// `checkpoints` (ascending, each <= m) additionally receive the sup-norm
/// residual of the prefix approximant G_k(t).
inline SparsifyResult sup_norm_sparsify(const OrthonormalSystem& system, const Eigen::VectorXd& t, int m,
                                        const std::vector<int>& checkpoints = {},
                                        std::vector<double>* checkpoint_residuals = nullptr,
                                        IaPolicy policy = IaPolicy::Greedy, double beta = 1.0) {
  detail::require_condition_c(system);
  if (m < 1) throw std::invalid_argument("sup_norm_sparsify: m must be positive");
  if (t.size() != system.size()) throw std::invalid_argument("sup_norm_sparsify: coefficient size mismatch");
  const double k2 = *system.constants().K2;
  SparsifyResult out;
  out.m = m;
  out.p = sparsify_exponent(system.size());
  out.a_norm_input = a_norm(system, t);
  out.approximant = Eigen::VectorXd::Zero(t.size());
  if (out.a_norm_input == 0.0) {
    if (checkpoint_residuals) checkpoint_residuals->assign(checkpoints.size(), 0.0);
    return out;
  }
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < t.size(); ++i)
    if (t(i) != 0.0) support.push_back(i);
  Mat<double> atoms = Mat<double>::Zero(t.size(), static_cast<Eigen::Index>(support.size()));
  for (std::size_t j = 0; j < support.size(); ++j) {
    const Eigen::Index i = support[j];
    atoms(i, static_cast<Eigen::Index>(j)) = (t(i) > 0 ? 1.0 : -1.0) / std::sqrt(k2);
  }
  const FiniteDictionary<double> dict(DictionaryKind::ScaledBasis, std::move(atoms), Symmetry::None);
  const Eigen::VectorXd f = t / out.a_norm_input;
  out.run = ia(f, dict, system, out.p, Schedule::for_lp(out.p, beta), m, policy);

  // counts per basis index give G_k(t) = |t|_A / k * sum_j count_j sign(b_j) g_j
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(t.size());
  std::size_t next = 0;
  if (checkpoint_residuals) checkpoint_residuals->clear();
  for (int k = 1; k <= m; ++k) {
    counts(support[static_cast<std::size_t>(out.run.indices[static_cast<std::size_t>(k - 1)])]) += 1.0;
    while (next < checkpoints.size() && checkpoints[next] == k) {
      Eigen::VectorXd g = Eigen::VectorXd::Zero(t.size());
      for (Eigen::Index i = 0; i < t.size(); ++i)
        if (counts(i) > 0) g(i) = counts(i) / k * (t(i) > 0 ? 1.0 : -1.0) / std::sqrt(k2) * out.a_norm_input;
      if (checkpoint_residuals) checkpoint_residuals->push_back(system.norm_inf(t - g));
      ++next;
    }
  }
  if (next != checkpoints.size()) throw std::invalid_argument("sup_norm_sparsify: checkpoints must be ascending and <= m");
  for (Eigen::Index i = 0; i < t.size(); ++i)
    if (counts(i) > 0) out.approximant(i) = counts(i) / m * (t(i) > 0 ? 1.0 : -1.0) / std::sqrt(k2) * out.a_norm_input;
  out.a_norm_output = a_norm(system, out.approximant);
  out.lp_residual = system.norm_lp(t - out.approximant, out.p);
  out.sup_residual = system.norm_inf(t - out.approximant);
  return out;
}

}  // namespace mdisc
