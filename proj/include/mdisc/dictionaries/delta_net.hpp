#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/core/point_set.hpp"

namespace mdisc {

/// Uniform tensor net on T^d with per-axis spacing 2pi/L <= delta. Every point
/// of the torus lies within sup-distance spacing/2 of a node.
struct DeltaNet {
  double delta = 0.0;
  std::vector<int> per_axis;
  PointMatrix nodes;

  Eigen::Index size() const { return nodes.rows(); }
  int dim() const { return static_cast<int>(per_axis.size()); }
  double spacing() const { return per_axis.empty() ? 0.0 : kTwoPi / per_axis.front(); }
  double covering_radius() const { return 0.5 * spacing(); }
};

inline DeltaNet build_delta_net(int dim, double delta) {
  if (dim < 1) throw std::invalid_argument("build_delta_net: dimension must be positive");
  if (!(delta > 0.0)) throw std::invalid_argument("build_delta_net: delta must be positive");
  const double per = std::ceil(kTwoPi / delta - 1e-12);
  if (std::pow(per, dim) > 5e7) throw std::invalid_argument("build_delta_net: net too large");
  DeltaNet net;
  net.delta = delta;
  net.per_axis.assign(static_cast<std::size_t>(dim), std::max(1, static_cast<int>(per)));
  net.nodes = tensor_grid(net.per_axis);
  return net;
}

/// delta_0 with delta_0^alpha = K1^{-1} N^{-1/2-beta}; then the kernel atoms of
/// neighbouring net nodes differ by at most (K2 N)^{-1/2} in L2.
inline double choose_delta0(const OrthonormalSystem& system) {
  const auto& c = system.constants();
  if (!c.K1 || !c.alpha || !c.beta)
    throw std::invalid_argument("choose_delta0: system does not declare K1, alpha and beta");
  const double n = system.size();
  return std::pow(std::pow(n, -0.5 - *c.beta) / *c.K1, 1.0 / *c.alpha);
}

}  // namespace mdisc
