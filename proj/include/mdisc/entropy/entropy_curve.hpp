#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "mdisc/core/frequency_set.hpp"

namespace mdisc {

enum class Field { Real, Complex };

/// Two-regime entropy bound
///   eps_k <= prefactor * scale / k        for k <= knee,
///   eps_k <= prefactor * 2^{-k / decay}   for k >= knee.
/// Logarithms are base 2 throughout.
struct EntropyCurve {
  std::string name;
  double prefactor = 1.0;
  double scale = 1.0;
  double knee = 1.0;
  double decay = 1.0;
  Field field = Field::Real;

  double operator()(double k) const {
    if (!(k >= 1.0)) throw std::invalid_argument("EntropyCurve: k must be >= 1");
    if (k <= knee) return prefactor * scale / k;
    return prefactor * std::exp2(-k / decay);
  }

  /// Values of both branch formulas at the knee.
  std::pair<double, double> branches_at_knee() const {
    return {prefactor * scale / knee, prefactor * std::exp2(-knee / decay)};
  }
};

/// eps_k(T(Q)_1, L_inf) for Q in Pi((2^n,...,2^n)):
/// C4 n^{3/2} |Q|/k up to k = 2|Q|, then C4 n^{3/2} 2^{-k/(2|Q|)}.
inline EntropyCurve entropy_curve_trig(const FrequencySet& q, int n, double c4 = 1.0) {
  if (n < 0) throw std::invalid_argument("entropy_curve_trig: n must be nonnegative");
  std::vector<int> box(static_cast<std::size_t>(q.dim()), 1 << n);
  if (!q.within_box(box)) throw std::invalid_argument("entropy_curve_trig: Q is not inside Pi((2^n,...,2^n))");
  const double size = static_cast<double>(q.size());
  return {"trig", c4 * std::pow(static_cast<double>(n), 1.5), size, 2.0 * size, 2.0 * size, Field::Complex};
}

/// eps_k(X^1_N, L_inf) for a real system satisfying A, B, C:
/// C (log N)^{3/2} N/k up to k = N, then C (log N)^{3/2} 2^{-k/N}.
inline EntropyCurve entropy_curve_general(int n_dim, double c = 1.0) {
  if (n_dim < 1) throw std::invalid_argument("entropy_curve_general: N must be positive");
  const double n = n_dim;
  return {"general", c * std::pow(std::log2(n), 1.5), n, n, n, Field::Real};
}

/// Hypothesis curve of the conditional theorem: B N/k up to k = N, then B 2^{-k/N}.
inline EntropyCurve entropy_curve_b(int n_dim, double b) {
  if (n_dim < 1) throw std::invalid_argument("entropy_curve_b: N must be positive");
  if (!(b > 0.0)) throw std::invalid_argument("entropy_curve_b: B must be positive");
  const double n = n_dim;
  return {"B", b, n, n, n, Field::Real};
}

/// Entropy bound from sigma_m(F, D)_X <= m^{-r}, |D| = N:
///   k <= N: C (log(2N/k)/k)^r,
///   k >= N: C N^{-r} 2^{-k/(2N)}  (2^{-k/N} over a real space).
inline double combine_sigma_to_entropy(double r, double n, double k, Field field = Field::Complex, double c = 1.0) {
  if (!(r > 0.0)) throw std::invalid_argument("combine_sigma_to_entropy: r must be positive");
  if (!(n >= 1.0) || !(k >= 1.0)) throw std::invalid_argument("combine_sigma_to_entropy: need N >= 1 and k >= 1");
  if (k <= n) return c * std::pow(std::log2(2.0 * n / k) / k, r);
  const double decay = field == Field::Real ? n : 2.0 * n;
  return c * std::pow(n, -r) * std::exp2(-k / decay);
}

}  // namespace mdisc
