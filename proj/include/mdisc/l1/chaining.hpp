#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mdisc/core/frequency_set.hpp"
#include "mdisc/entropy/entropy_curve.hpp"

namespace mdisc {

/// Bernstein-type tail 2 exp(-m eta^2 / (8 M)) for sums of centred variables
/// with |g|_1 <= 2 and |g|_inf <= M.
inline double bernstein_tail(double m, double eta, double sup_bound) {
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("bernstein_tail: eta must lie in (0, 1)");
  if (!(sup_bound > 0.0)) throw std::invalid_argument("bernstein_tail: sup bound must be positive");
  return 2.0 * std::exp(-m * eta * eta / (8.0 * sup_bound));
}

/// Inputs of the chaining union bound. Level j uses the net of the entropy
/// curve at 2^j (at most 2^{2^j} elements) and tolerance eta_j.
struct ChainingParams {
  EntropyCurve curve;
  double eta = 0.25;
  double eta_j = 0.0;           // per-level slack
  double sup_bound = 1.0;       // M with |f|_inf <= M |f|_1 on the space
  double bernstein_c = 8.0;     // first level: N_1 exp(-m eta_1^2 / (C M))
  double increment_c = 16.0;    // levels: N_j exp(-m eta_j^2 / (16 delta_{j-1}))
  double size = 1.0;            // |Q| or N
  double n = 1.0;
  int dim = 1;
};

struct ChainingLevel {
  int j = 0;
  double delta = 0.0;           // delta_j = eps_{2^j}
  double log_net_size = 0.0;    // ln N_j = 2^j ln 2
  double eta_j = 0.0;
  double term = 0.0;
};

struct ChainingBudget {
  double m = 0.0;
  int J = 0;
  double total = 0.0;           // doubled sum of all level terms
  double first_term = 0.0;
  std::vector<ChainingLevel> levels;
  bool j_cap_holds = false;     // J <= 2 d n
  double two_pow_j_ratio = 0.0; // 2^J / (4 |Q| log2 n), the constant needed in 2^J <= 4|Q| C log n
};

/// T(Q), Q inside the box of half-width 2^n: eta in [2^{-2^{nd/2}}, 1/4],
/// eta_j = eta / (4 n d), M = |Q|. With enforce_window = false any eta in
/// (0, 1/4] is evaluated (the lower end of the window exceeds 1/8 for nd <= 3).
inline ChainingParams chaining_params_trig(const FrequencySet& q, int n, double eta, double c4 = 1.0,
                                           double bernstein_c = 8.0, bool enforce_window = true) {
  const int d = q.dim();
  if (n < 1) throw std::invalid_argument("chaining_params_trig: n must be positive");
  if (q.max_abs() > (1 << n)) throw std::invalid_argument("chaining_params_trig: Q is not inside the box of half-width 2^n");
  const double lower = enforce_window ? std::exp2(-std::exp2(n * d / 2.0)) : 0.0;
  if (!(eta > 0.0 && eta >= lower && eta <= 0.25))
    throw std::invalid_argument("chaining_params_trig: eta outside [2^{-2^{nd/2}}, 1/4]");
  if (!(bernstein_c > 0.0)) throw std::invalid_argument("chaining_params_trig: Bernstein constant must be positive");
  ChainingParams p;
  p.curve = entropy_curve_trig(q, n, c4);
  p.eta = eta;
  p.eta_j = eta / (4.0 * n * d);
  p.sup_bound = static_cast<double>(q.size());
  p.bernstein_c = bernstein_c;
  p.size = static_cast<double>(q.size());
  p.n = n;
  p.dim = d;
  return p;
}

/// Subspace of dimension N with eps_k(X^1_N, L_inf) <= B (N/k or 2^{-k/N}):
/// eta in [2^{-N}, 1/4], eta_j = eta / (4 log2(2 N log2(8B))), M = B N.
inline ChainingParams chaining_params_conditional(int n_dim, double b, double eta, double bernstein_c = 8.0) {
  if (n_dim < 1) throw std::invalid_argument("chaining_params_conditional: N must be positive");
  if (!(eta >= std::exp2(-n_dim) && eta <= 0.25))
    throw std::invalid_argument("chaining_params_conditional: eta outside [2^{-N}, 1/4]");
  ChainingParams p;
  p.curve = entropy_curve_b(n_dim, b);
  const double levels = std::log2(2.0 * n_dim * std::log2(8.0 * b));
  p.eta = eta;
  p.eta_j = eta / (4.0 * levels);
  p.sup_bound = b * n_dim;
  p.bernstein_c = bernstein_c;
  p.size = n_dim;
  p.n = levels;
  p.dim = 1;
  return p;
}

inline int chaining_depth(const ChainingParams& p) {
  int j = 1;
  while (p.curve(std::exp2(j)) > p.eta / 4.0) {
    if (++j > 62) throw std::runtime_error("chaining_depth: entropy curve does not reach eta/4");
  }
  return j;
}

inline ChainingBudget chaining_budget(const ChainingParams& p, double m) {
  if (!(m >= 0.0)) throw std::invalid_argument("chaining_budget: m must be nonnegative");
  auto capped_exp = [](double x) { return std::exp(std::min(x, 700.0)); };
  ChainingBudget b;
  b.m = m;
  b.J = chaining_depth(p);
  const double ln2 = std::log(2.0);
  b.first_term = capped_exp(2.0 * ln2 - m * p.eta_j * p.eta_j / (p.bernstein_c * p.sup_bound));
  double sum = b.first_term;
  b.levels.push_back({1, p.curve(2.0), 2.0 * ln2, p.eta_j, b.first_term});
  for (int j = 2; j <= b.J; ++j) {
    ChainingLevel lvl;
    lvl.j = j;
    lvl.delta = p.curve(std::exp2(j));
    lvl.log_net_size = std::exp2(j) * ln2;
    lvl.eta_j = p.eta_j;
    lvl.term = capped_exp(lvl.log_net_size - m * p.eta_j * p.eta_j / (p.increment_c * p.curve(std::exp2(j - 1))));
    sum += lvl.term;
    b.levels.push_back(lvl);
  }
  b.total = 2.0 * sum;
  b.j_cap_holds = b.J <= 2 * p.dim * p.n;
  b.two_pow_j_ratio = p.n > 1 ? std::exp2(b.J) / (4.0 * p.size * std::log2(p.n)) : 0.0;
  return b;
}

/// Smallest integer m with chaining_budget(p, m).total < target.
inline long long min_m_chaining(const ChainingParams& p, double target = 1.0) {
  if (!(target > 0.0 && target <= 1.0)) throw std::invalid_argument("min_m_chaining: target must lie in (0, 1]");
  long long hi = 1;
  while (chaining_budget(p, static_cast<double>(hi)).total >= target) {
    if (hi > (1LL << 60)) throw std::runtime_error("min_m_chaining: no finite m found");
    hi *= 2;
  }
  long long lo = hi / 2;
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    if (chaining_budget(p, static_cast<double>(mid)).total < target)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace mdisc
