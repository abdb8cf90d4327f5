#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdisc {

inline constexpr double kDefaultConcentrationC = 2.0 / std::numbers::ln2;

/// Failure probability bound N exp(-m eta^2 / (c N t^2)) for
/// |(1/m) sum G(x^k) - I| >= eta under m i.i.d. draws.
struct ConcentrationBudget {
  double N = 0, t = 1, m = 0, eta = 0, c = kDefaultConcentrationC;
  double bound = 0;
};

namespace detail {
inline void check_concentration_args(double n, double t, double eta, double c) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("concentration: eta must lie in (0, 1]");
  if (!(t >= 1.0)) throw std::invalid_argument("concentration: t must be at least 1");
  if (!(n >= 1.0)) throw std::invalid_argument("concentration: N must be at least 1");
  if (!(c > 0.0)) throw std::invalid_argument("concentration: c must be positive");
}
}  // namespace detail

inline ConcentrationBudget concentration_budget(double n, double t, double eta, double m,
                                                double c = kDefaultConcentrationC) {
  detail::check_concentration_args(n, t, eta, c);
  if (!(m >= 0.0)) throw std::invalid_argument("concentration: m must be nonnegative");
  return {n, t, m, eta, c, n * std::exp(-m * eta * eta / (c * n * t * t))};
}

/// Smallest integer m with N exp(-m eta^2/(c N t^2)) < target.
inline long long min_m_for(double n, double t, double eta, double target, double c = kDefaultConcentrationC) {
  detail::check_concentration_args(n, t, eta, c);
  if (!(target > 0.0 && target < 1.0)) throw std::invalid_argument("min_m_for: target must lie in (0, 1)");
  const double x = c * n * t * t * std::log(n / target) / (eta * eta);
  return static_cast<long long>(std::floor(x)) + 1;
}

/// Matrix Chernoff tails for sums of m independent PSD matrices with
/// lambda_max(T_k) <= R and the given s_min / s_max.
inline double chernoff_lower_tail(double n, double eta, double s_min, double r) {
  if (!(eta >= 0.0 && eta < 1.0)) throw std::invalid_argument("chernoff_lower_tail: eta must lie in [0, 1)");
  const double base = std::exp(-eta) / std::pow(1.0 - eta, 1.0 - eta);
  return n * std::pow(base, s_min / r);
}

inline double chernoff_upper_tail(double n, double eta, double s_max, double r) {
  if (!(eta >= 0.0)) throw std::invalid_argument("chernoff_upper_tail: eta must be nonnegative");
  const double base = std::exp(eta) / std::pow(1.0 + eta, 1.0 + eta);
  return n * std::pow(base, s_max / r);
}

/// Matrix Bernstein tail N exp(-eta^2 / (2 sigma^2 + (2/3) R eta)).
inline double matrix_bernstein_tail(double n, double eta, double sigma2, double r) {
  if (!(eta > 0.0)) throw std::invalid_argument("matrix_bernstein_tail: eta must be positive");
  return n * std::exp(-eta * eta / (2.0 * sigma2 + 2.0 * r * eta / 3.0));
}

}  // namespace mdisc
