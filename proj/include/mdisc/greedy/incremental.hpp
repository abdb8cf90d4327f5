#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "mdisc/core/norms.hpp"
#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/dictionaries/dictionary.hpp"
#include "mdisc/greedy/greedy_run.hpp"

namespace mdisc {

/// eps_n = beta gamma^{1/q} n^{-1/p'}, 1/p' + 1/q = 1, for a space whose modulus
/// of smoothness satisfies rho(u) <= gamma u^q.
struct Schedule {
  double beta = 1.0;
  double gamma = 0.5;
  double q = 2.0;

  /// L_p, 2 <= p < inf: rho(u) <= (p-1) u^2 / 2.
  static Schedule for_lp(double p, double beta = 1.0) {
    if (!(p >= 2.0) || std::isinf(p)) throw std::invalid_argument("Schedule::for_lp: need 2 <= p < inf");
    return Schedule{beta, 0.5 * (p - 1.0), 2.0};
  }

  double epsilon(int n) const {
    if (n < 1) throw std::invalid_argument("Schedule: step index starts at 1");
    if (!(beta > 0.0 && gamma > 0.0 && q > 1.0 && q <= 2.0))
      throw std::invalid_argument("Schedule: need beta > 0, gamma > 0, 1 < q <= 2");
    return beta * std::pow(gamma, 1.0 / q) * std::pow(static_cast<double>(n), -(q - 1.0) / q);
  }
};

/// Norming functional of f in L_p(mu), mu given by quadrature weights:
/// F_f(g) = |f|_p^{1-p} int |f|^{p-1} sign(f) g dmu.
class NormingFunctional {
public:
  NormingFunctional(const Eigen::VectorXd& f_values, const Eigen::VectorXd& weights, double p) : p_(p) {
    if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("NormingFunctional: need 1 <= p < inf");
    norm_ = lp_norm(f_values, weights, p);
    if (norm_ == 0.0) throw std::invalid_argument("NormingFunctional: f = 0 has no norming functional");
    const Eigen::ArrayXd a = f_values.array();
    density_ = weights.array() * a.abs().pow(p - 1.0) * a.sign() * std::pow(norm_, 1.0 - p);
  }

  double p() const { return p_; }
  double norm() const { return norm_; }
  /// Quadrature weight times the dual density at each node.
  const Eigen::VectorXd& weighted_density() const { return density_; }

  double operator()(const Eigen::VectorXd& g_values) const { return density_.dot(g_values); }

private:
  double p_;
  double norm_ = 0.0;
  Eigen::VectorXd density_;
};

enum class IaPolicy {
  Greedy,           // argmax F(phi); most admissible atom
  FirstAdmissible,  // lowest index with F(phi - f) >= -eps
};

struct ConditionBViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// IA(eps) in L_p on the span of an orthonormal system. The dictionary lives in
/// coefficient space R^N; values are taken on the system's quadrature nodes.
/// phi_k is any atom of D (signs included when the dictionary is symmetric)
/// with F_{f_{k-1}}(phi_k - f) >= -eps_k; G_k = (1 - 1/k) G_{k-1} + phi_k / k.
/// Throws ConditionBViolation if no atom qualifies.
inline GreedyRun<double> ia(const Eigen::VectorXd& f, const FiniteDictionary<double>& dict,
                            const OrthonormalSystem& system, double p, const Schedule& schedule, int m,
                            IaPolicy policy = IaPolicy::Greedy) {
  if (m < 0) throw std::invalid_argument("ia: negative iteration count");
  if (!(p >= 2.0) || std::isinf(p)) throw std::invalid_argument("ia: need 2 <= p < inf");
  if (dict.size() == 0) throw std::invalid_argument("ia: empty dictionary");
  if (f.size() != system.size() || dict.ambient_dim() != system.size())
    throw std::invalid_argument("ia: dimension mismatch between f, dictionary and system");
  const Eigen::MatrixXd& phi = system.node_values();
  const Eigen::VectorXd& w = system.quadrature().weights();
  const Eigen::VectorXd f_values = phi * f;

  GreedyRun<double> run;
  run.algorithm = "ia";
  run.dictionary = dict.kind();
  run.m = m;
  Eigen::VectorXd g = Eigen::VectorXd::Zero(f.size());
  Eigen::VectorXd r_values = f_values;
  const bool signed_atoms = dict.symmetry() != Symmetry::None;
  for (int k = 1; k <= m; ++k) {
    Eigen::Index pick = -1;
    double mult = 1.0;
    if (lp_norm(r_values, w, p) == 0.0) {
      if (k == 1) throw std::invalid_argument("ia: f = 0");
      pick = run.indices.back();
      mult = run.atoms.back().dot(dict.atom(pick)) < 0 ? -1.0 : 1.0;
    } else {
      NormingFunctional F(r_values, w, p);
      const Eigen::VectorXd z = phi.transpose() * F.weighted_density();
      const Eigen::VectorXd raw = dict.atoms().transpose() * z;
      const double ff = z.dot(f);
      const double slack = -schedule.epsilon(k);
      Eigen::VectorXd scores = signed_atoms ? Eigen::VectorXd(raw.cwiseAbs()) : raw;
      if (policy == IaPolicy::Greedy) {
        scores.maxCoeff(&pick);
        for (Eigen::Index j = 0; j < scores.size(); ++j)
          if (scores(j) == scores(pick)) {
            pick = j;
            break;
          }
        if (scores(pick) - ff < slack) pick = -1;
      } else {
        for (Eigen::Index j = 0; j < scores.size(); ++j)
          if (scores(j) - ff >= slack) {
            pick = j;
            break;
          }
      }
      if (pick < 0)
        throw ConditionBViolation("ia: no atom satisfies F(phi - f) >= -eps at step " + std::to_string(k) +
                                  "; f is not in A_1(D)");
      if (signed_atoms && raw(pick) < 0) mult = -1.0;
    }
    const Eigen::VectorXd atom = mult * dict.atom(pick);
    const double inv = 1.0 / k;
    g = (1.0 - inv) * g + inv * atom;
    r_values = (1.0 - inv) * r_values + inv * (f_values - phi * atom);
    run.indices.push_back(pick);
    run.parameters.push_back(dict.parameter(pick));
    run.atoms.push_back(atom);
    run.residual_norms.push_back(lp_norm(r_values, w, p));
  }
  run.coefficients = Eigen::VectorXd::Constant(m, m > 0 ? 1.0 / m : 0.0);
  run.approximant = g;
  run.residual = f - g;
  return run;
}

}  // namespace mdisc
