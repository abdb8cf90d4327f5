#pragma once

#include <cstdint>
#include <stdexcept>

#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/core/random.hpp"

namespace mdisc {

/// m i.i.d. uniform knots on [0, 2pi)^d. No certificate; see certify_l1.
inline PointSet random_l1_pointset(int dim, Eigen::Index m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("random_l1_pointset: m must be at least 1");
  if (dim < 1) throw std::invalid_argument("random_l1_pointset: dimension must be positive");
  Rng rng(seed);
  return PointSet(uniform_torus_points(m, dim, rng));
}

/// Draws from the measure of the system (uniform over the nodes of a discrete domain).
inline PointSet random_l1_pointset(const OrthonormalSystem& system, Eigen::Index m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("random_l1_pointset: m must be at least 1");
  Rng rng(seed);
  return PointSet(system.sample(m, rng));
}

}  // namespace mdisc
