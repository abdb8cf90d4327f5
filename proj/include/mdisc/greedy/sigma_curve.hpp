#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdisc/core/norms.hpp"
#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/core/random.hpp"
#include "mdisc/core/trig_polynomial.hpp"
#include "mdisc/dictionaries/continuous.hpp"
#include "mdisc/dictionaries/delta_net.hpp"
#include "mdisc/greedy/oga.hpp"
#include "mdisc/greedy/rga.hpp"
#include "mdisc/greedy/sparsify.hpp"

namespace mdisc {

// ---------------------------------------------------------------------------
// Stress sets. Membership in the relevant ball is by construction: elements
// are normalised in the ball's own norm, never tested afterwards.

/// Elements of T(Q)_1: Gaussian polynomials and Dirichlet kernel translates,
/// each divided by its L1 norm (computed on a 16x oversampled grid).
inline std::vector<TrigPolynomial> trig_l1_stress_set(const FrequencySet& q, int count, Rng& rng) {
  const Quadrature quad = quadrature_for(q, 16);
  std::uniform_real_distribution<double> unif(0.0, kTwoPi);
  std::vector<TrigPolynomial> out;
  for (int i = 0; i < count; ++i) {
    TrigPolynomial f;
    if (i % 2 == 0) {
      f = random_trig_polynomial(q, rng);
    } else {
      std::vector<double> y(static_cast<std::size_t>(q.dim()));
      for (auto& v : y) v = unif(rng);
      f = dirichlet_polynomial(q, y);
    }
    const double l1 = norm_lp(f, 1.0, quad);
    out.emplace_back(q, f.coeffs() / l1);
  }
  return out;
}

/// Coefficient vectors of elements of the unit L_p ball of span{u_i}
/// (p = 1 for X^1_N, p = 2 for X^2_N): Gaussian combinations and kernel
/// translates D_N(., y).
inline std::vector<Eigen::VectorXd> system_stress_set(const OrthonormalSystem& system, double p, int count,
                                                      Rng& rng) {
  std::vector<Eigen::VectorXd> out;
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd b;
    if (i % 2 == 0) {
      b = gaussian_vector(system.size(), rng);
    } else {
      const PointMatrix y = system.sample(1, rng);
      b = system.evaluate(row_span(y, 0));
    }
    out.push_back(b / system.norm_lp(b, p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructive m-term approximants.

/// RGA over the continuous kernel dictionary D^0 for f in X_N, using
/// f in A_1((D^0)^+-, (K2 N)^{1/2} |f|_1). Residual <= 2 (K2 N / m)^{1/2} |f|_1.
inline GreedyRun<double> kernel_rga(const OrthonormalSystem& system, const ContinuousKernelDictionary& d0,
                                    const Eigen::VectorXd& f, int m) {
  const double mass = system.norm_lp(f, 1.0) / d0.scale();
  if (mass == 0.0) {
    GreedyRun<double> run;
    run.algorithm = "rga";
    run.m = m;
    run.residual_norms.assign(static_cast<std::size_t>(m), 0.0);
    run.approximant = Eigen::VectorXd::Zero(f.size());
    run.residual = f;
    return run;
  }
  return rga(f, d0, m, mass);
}

/// Nearest node of a uniform net (sup distance <= covering radius).
inline std::vector<double> snap_to_net(const std::vector<double>& y, const DeltaNet& net) {
  std::vector<double> out(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    const int per = net.per_axis[j];
    const double h = kTwoPi / per;
    long idx = std::lround(wrap_angle(y[j]) / h) % per;
    out[j] = h * static_cast<double>(idx);
  }
  return out;
}

/// t_m(f): the D^0 RGA approximant with every shift y(k) moved to its nearest
/// node of the delta_0-net, i.e. an m-term element over D^1. For m <= N its
/// L2 error is at most 3 (K2 N / m)^{1/2} |f|_1.
struct NetApproximant {
  Eigen::VectorXd coefficients;    // in the u-basis
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;     // c_k multiplying g_{y^{j(k)}}
};

inline NetApproximant snapped_kernel_rga(const OrthonormalSystem& system, const ContinuousKernelDictionary& d0,
                                         const DeltaNet& net, const Eigen::VectorXd& f, int m) {
  NetApproximant out;
  out.coefficients = Eigen::VectorXd::Zero(f.size());
  if (m == 0) return out;
  const GreedyRun<double> run = kernel_rga(system, d0, f, m);
  for (std::size_t k = 0; k < run.atoms.size(); ++k) {
    const std::vector<double> node =
        system.domain() == DomainKind::Torus ? snap_to_net(run.parameters[k], net) : run.parameters[k];
    const double c = run.coefficients(static_cast<Eigen::Index>(k)) *
                     (run.atoms[k].dot(d0.atom_at(run.parameters[k])) < 0 ? -1.0 : 1.0);
    out.coefficients += c * d0.atom_at(node);
    out.nodes.push_back(node);
    out.weights.push_back(c);
  }
  return out;
}

struct CombinedApproximant {
  Eigen::VectorXd coefficients;
  int kernel_terms = 0;
  int basis_terms = 0;
  double sup_residual = 0.0;
};

/// Two-stage m-term approximation of f in X^1_N over D^1 u D^2 in L_inf:
/// floor(m/2) net-kernel terms from snapped_kernel_rga, then sup-norm
/// sparsification of the remainder with the other ceil(m/2) terms.
inline CombinedApproximant combined_sparsify(const OrthonormalSystem& system, const ContinuousKernelDictionary& d0,
                                             const DeltaNet& net, const Eigen::VectorXd& f, int m) {
  if (m < 2) throw std::invalid_argument("combined_sparsify: need m >= 2");
  CombinedApproximant out;
  out.kernel_terms = m / 2;
  out.basis_terms = m - out.kernel_terms;
  const NetApproximant stage1 = snapped_kernel_rga(system, d0, net, f, out.kernel_terms);
  const Eigen::VectorXd rest = f - stage1.coefficients;
  const SparsifyResult stage2 = sup_norm_sparsify(system, rest, out.basis_terms);
  out.coefficients = stage1.coefficients + stage2.approximant;
  out.sup_residual = system.norm_inf(f - out.coefficients);
  return out;
}

// ---------------------------------------------------------------------------
// sigma_m curves.

struct SigmaPoint {
  int m = 0;
  double residual = 0.0;   // max over the stress set
  double bound = 0.0;
  bool guaranteed = false; // the bound is a theorem for this m, not just a rate
};

struct SigmaCurve {
  std::string ball;
  std::string dictionary;
  std::string norm;
  std::vector<SigmaPoint> points;

  /// No guaranteed bound is exceeded (1e-10 slack).
  bool holds() const {
    return std::all_of(points.begin(), points.end(), [](const SigmaPoint& p) {
      return !p.guaranteed || p.residual <= p.bound * (1.0 + 1e-10) + 1e-10;
    });
  }
};

/// T(Q)_1 in L2 over D^1(Q) by OGA, bound (|Q|/m)^{1/2}.
inline SigmaCurve sigma_curve_trig_l1(const FrequencySet& q, const std::vector<int>& ms, int stress, Rng& rng) {
  const ContinuousShiftedKernelDictionary dict(q);
  const auto set = trig_l1_stress_set(q, stress, rng);
  SigmaCurve curve{"T(Q)_1", to_string(dict.kind()), "L2", {}};
  const int mmax = ms.empty() ? 0 : *std::max_element(ms.begin(), ms.end());
  std::vector<double> worst(static_cast<std::size_t>(mmax), 0.0);
  for (const auto& f : set) {
    const auto run = oga(Vec<cplx>(f.coeffs()), dict, 1.0, mmax);
    for (int k = 0; k < mmax; ++k)
      worst[static_cast<std::size_t>(k)] = std::max(worst[static_cast<std::size_t>(k)], run.residual_norms[static_cast<std::size_t>(k)]);
  }
  for (int m : ms) {
    if (m < 1) throw std::invalid_argument("sigma_curve: m must be positive");
    curve.points.push_back({m, worst[static_cast<std::size_t>(m - 1)],
                            std::sqrt(static_cast<double>(q.size()) / m), true});
  }
  return curve;
}

/// X^1_N in L2 over the delta_0-net kernel dictionary D^1, bound 3 (K2 N/m)^{1/2}
/// (guaranteed for m <= N).
inline SigmaCurve sigma_curve_system_l1(const OrthonormalSystem& system, const std::vector<int>& ms, int stress,
                                        Rng& rng) {
  const ContinuousKernelDictionary d0(system);
  const DeltaNet net = build_delta_net(system.dim(), choose_delta0(system));
  const auto set = system_stress_set(system, 1.0, stress, rng);
  const double k2n = *system.constants().K2 * system.size();
  SigmaCurve curve{"X^1_N", to_string(DictionaryKind::KernelNet), "L2", {}};
  for (int m : ms) {
    if (m < 1) throw std::invalid_argument("sigma_curve: m must be positive");
    double worst = 0.0;
    for (const auto& f : set) {
      const NetApproximant t = snapped_kernel_rga(system, d0, net, f, m);
      worst = std::max(worst, (f - t.coefficients).norm());
    }
    curve.points.push_back({m, worst, 3.0 * std::sqrt(k2n / m), m <= system.size()});
  }
  return curve;
}

/// X^2_N in L_inf over D^2 by sup-norm sparsification. The rate
/// (N/m)^{1/2} (ln N)^{1/2} carries an unspecified constant, so the reported
/// bound column is the bare rate and nothing is asserted.
inline SigmaCurve sigma_curve_system_l2(const OrthonormalSystem& system, const std::vector<int>& ms, int stress,
                                        Rng& rng) {
  const auto set = system_stress_set(system, 2.0, stress, rng);
  SigmaCurve curve{"X^2_N", to_string(DictionaryKind::ScaledBasis), "Linf", {}};
  std::vector<int> sorted = ms;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<double> worst(sorted.size(), 0.0);
  for (const auto& f : set) {
    std::vector<double> res;
    sup_norm_sparsify(system, f, sorted.back(), sorted, &res);
    for (std::size_t i = 0; i < sorted.size(); ++i) worst[i] = std::max(worst[i], res[i]);
  }
  const double n = system.size();
  for (int m : ms) {
    const auto i = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), m) - sorted.begin());
    curve.points.push_back({m, worst[i], std::sqrt(n / m * std::log(n)), false});
  }
  return curve;
}

/// X^1_N in L_inf over D^1 u D^2 (two-stage pipeline); bare rate (N/m)(ln N)^{1/2}.
inline SigmaCurve sigma_curve_combined(const OrthonormalSystem& system, const std::vector<int>& ms, int stress,
                                       Rng& rng) {
  const ContinuousKernelDictionary d0(system);
  const DeltaNet net = build_delta_net(system.dim(), choose_delta0(system));
  const auto set = system_stress_set(system, 1.0, stress, rng);
  SigmaCurve curve{"X^1_N", "kernel-net+scaled-basis", "Linf", {}};
  const double n = system.size();
  for (int m : ms) {
    double worst = 0.0;
    for (const auto& f : set) worst = std::max(worst, combined_sparsify(system, d0, net, f, m).sup_residual);
    curve.points.push_back({m, worst, n / m * std::sqrt(std::log(n)), false});
  }
  return curve;
}

/// Least-squares slope of log(y) against log(x).
inline double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("log_log_slope: need two or more pairs");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace mdisc
