#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdisc/core/quadrature.hpp"
#include "mdisc/core/trig_polynomial.hpp"

namespace mdisc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline void check_exponent(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("norm exponent must satisfy 1 <= p <= inf");
}

/// (sum_j w_j |v_j|^p)^{1/p}, or max |v_j| for p = inf.
inline double lp_norm(const Eigen::VectorXd& values, const Eigen::VectorXd& weights, double p) {
  check_exponent(p);
  if (std::isinf(p)) return values.cwiseAbs().maxCoeff();
  if (p == 1.0) return weights.dot(values.cwiseAbs());
  if (p == 2.0) return std::sqrt(weights.dot(values.cwiseAbs2()));
  return std::pow(weights.dot(values.cwiseAbs().array().pow(p).matrix()), 1.0 / p);
}

/// Golden-section maximisation of mag along each axis in turn, starting from
/// x0 and searching within +-half_width[j]. Returns the best value seen.
template <class Magnitude>
double refine_max(Magnitude&& mag, std::vector<double>& x, const std::vector<double>& half_width,
                  int sweeps = 2, double tol = 1e-8) {
  constexpr double inv_phi = 0.6180339887498949;
  double best = mag(std::span<const double>(x));
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double centre = x[j];
      double a = centre - half_width[j];
      double b = centre + half_width[j];
      auto eval_at = [&](double t) {
        x[j] = t;
        return mag(std::span<const double>(x));
      };
      double c = b - inv_phi * (b - a);
      double d = a + inv_phi * (b - a);
      double fc = eval_at(c);
      double fd = eval_at(d);
      while (b - a > tol) {
        if (fc > fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - inv_phi * (b - a);
          fc = eval_at(c);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + inv_phi * (b - a);
          fd = eval_at(d);
        }
      }
      const double t = 0.5 * (a + b);
      const double ft = eval_at(t);
      if (ft > best) {
        best = ft;
        x[j] = t;
      } else {
        x[j] = centre;
      }
    }
  }
  for (auto& xi : x) xi = wrap_angle(xi);
  return best;
}

/// Indices of the `count` largest entries, largest first (lowest index on ties).
inline std::vector<Eigen::Index> top_indices(const Eigen::VectorXd& v, int count) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) idx[static_cast<std::size_t>(i)] = i;
  const auto k = std::min<std::size_t>(idx.size(), static_cast<std::size_t>(std::max(count, 1)));
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                    [&](Eigen::Index a, Eigen::Index b) { return v(a) > v(b) || (v(a) == v(b) && a < b); });
  idx.resize(k);
  return idx;
}

/// Maximiser of mag: best grid node, then golden-section refinement started
/// from the `starts` best grid nodes (two peaks of nearly equal height can
/// swap order between the grid and the continuum).
template <class Magnitude>
std::vector<double> refine_argmax(Magnitude&& mag, const PointMatrix& grid, const Eigen::VectorXd& grid_values,
                                  const std::vector<double>& half_width, int starts = 4) {
  const auto cand = top_indices(grid_values, starts);
  auto p0 = row_span(grid, cand.front());
  std::vector<double> best_x(p0.begin(), p0.end());
  double best = grid_values(cand.front());
  if (half_width.empty()) return best_x;
  for (Eigen::Index c : cand) {
    auto p = row_span(grid, c);
    std::vector<double> x(p.begin(), p.end());
    const double v = refine_max(mag, x, half_width);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

/// Sup norm of a function on the torus: grid maximum over the quadrature nodes
/// refined by golden-section search around the largest nodes. The result is a
/// lower bound on the true supremum and is exact up to the refinement
/// tolerance when the grid resolves the peak.
template <class Magnitude>
double sup_norm(Magnitude&& mag, const Quadrature& quad, const Eigen::VectorXd& node_values) {
  const Eigen::VectorXd a = node_values.cwiseAbs();
  const double grid_max = a.maxCoeff();
  if (!quad.is_tensor_grid()) return grid_max;
  const std::vector<double> x = refine_argmax(mag, quad.nodes(), a, quad.spacing());
  return std::max(grid_max, mag(std::span<const double>(x)));
}

inline double norm_lp(const TrigPolynomial& f, double p, const Quadrature& quad) {
  check_exponent(p);
  Eigen::VectorXd values = f.evaluate(quad.nodes()).cwiseAbs();
  if (!std::isinf(p)) return lp_norm(values, quad.weights(), p);
  return sup_norm([&](std::span<const double> x) { return std::abs(f(x)); }, quad, values);
}

inline double norm_inf(const TrigPolynomial& f, const Quadrature& quad) {
  return norm_lp(f, kInf, quad);
}

/// Quadrature adequate for polynomials over q: trapezoid grid oversampled
/// relative to the largest frequency.
inline Quadrature quadrature_for(const FrequencySet& q, int oversampling = 4) {
  return Quadrature::torus(q.dim(), q.max_abs(), oversampling);
}

}  // namespace mdisc
