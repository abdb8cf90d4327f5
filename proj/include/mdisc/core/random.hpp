#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "mdisc/core/point_set.hpp"

namespace mdisc {

using Rng = std::mt19937_64;

inline Eigen::VectorXd gaussian_vector(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

inline Eigen::VectorXcd complex_gaussian_vector(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = {re, im};
  }
  return v;
}

/// m i.i.d. uniform points on [0, 2pi)^d.
inline PointMatrix uniform_torus_points(Eigen::Index m, int dim, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, kTwoPi);
  PointMatrix pts(m, dim);
  for (Eigen::Index i = 0; i < m; ++i)
    for (int j = 0; j < dim; ++j) pts(i, j) = wrap_angle(unif(rng));
  return pts;
}

}  // namespace mdisc
