#pragma once

#include <stdexcept>
#include <vector>

#include "mdisc/core/point_set.hpp"

namespace mdisc {

/// Cubature nodes and weights for a probability measure. On the torus this is
/// the periodic trapezoid rule on a tensor grid, exact for every trigonometric
/// monomial e^{i(k,x)} with |k_j| < per_axis[j].
class Quadrature {
public:
  Quadrature() = default;

  Quadrature(PointMatrix nodes, Eigen::VectorXd weights, std::vector<int> per_axis = {})
      : nodes_(std::move(nodes)), weights_(std::move(weights)), per_axis_(std::move(per_axis)) {
    if (nodes_.rows() != weights_.size())
      throw std::invalid_argument("Quadrature: node/weight count mismatch");
    if (nodes_.rows() == 0) throw std::invalid_argument("Quadrature: no nodes");
  }

  /// Trapezoid grid serving frequencies up to max_frequency: each axis gets
  /// oversampling * (2 * max_frequency + 1) nodes, enough to integrate products
  /// of two such monomials exactly for any oversampling >= 1.
  static Quadrature torus(int dim, int max_frequency, int oversampling = 4) {
    if (dim < 1) throw std::invalid_argument("Quadrature::torus: dimension must be positive");
    if (max_frequency < 0 || oversampling < 1)
      throw std::invalid_argument("Quadrature::torus: bad frequency or oversampling");
    std::vector<int> sizes(static_cast<std::size_t>(dim), oversampling * (2 * max_frequency + 1));
    return tensor(sizes);
  }

  static Quadrature tensor(const std::vector<int>& sizes) {
    PointMatrix nodes = tensor_grid(sizes);
    Eigen::VectorXd w = Eigen::VectorXd::Constant(nodes.rows(), 1.0 / static_cast<double>(nodes.rows()));
    return Quadrature(std::move(nodes), std::move(w), sizes);
  }

  /// Uniform probability measure on a finite node set (the discrete Omega_M).
  static Quadrature uniform(PointMatrix nodes) {
    Eigen::VectorXd w = Eigen::VectorXd::Constant(nodes.rows(), 1.0 / static_cast<double>(nodes.rows()));
    return Quadrature(std::move(nodes), std::move(w));
  }

  const PointMatrix& nodes() const { return nodes_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  Eigen::Index size() const { return nodes_.rows(); }
  int dim() const { return static_cast<int>(nodes_.cols()); }
  bool is_tensor_grid() const { return !per_axis_.empty(); }
  const std::vector<int>& per_axis() const { return per_axis_; }

  /// Largest per-axis |k| integrated exactly (aliasing threshold), -1 if not a grid.
  int exact_frequency() const {
    if (per_axis_.empty()) return -1;
    int lo = per_axis_.front();
    for (int L : per_axis_) lo = std::min(lo, L);
    return lo - 1;
  }

  /// Grid spacing along each axis (empty for unstructured rules).
  std::vector<double> spacing() const {
    std::vector<double> h;
    for (int L : per_axis_) h.push_back(kTwoPi / L);
    return h;
  }

  template <class Values>
  double integrate(const Values& values) const {
    return weights_.dot(values);
  }

private:
  PointMatrix nodes_;
  Eigen::VectorXd weights_;
  std::vector<int> per_axis_;
};

}  // namespace mdisc
