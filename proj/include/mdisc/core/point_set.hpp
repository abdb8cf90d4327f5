#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace mdisc {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// One point per row; row-major so a point is a contiguous span.
using PointMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline std::span<const double> row_span(const PointMatrix& pts, Eigen::Index i) {
  return {pts.data() + i * pts.cols(), static_cast<std::size_t>(pts.cols())};
}

/// Maps an angle to [0, 2pi).
inline double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// Knots xi^1..xi^m with optional nonnegative weights. Without weights the
/// point set stands for the equal-weight rule 1/m.
class PointSet {
public:
  PointSet() = default;

  explicit PointSet(PointMatrix points, std::optional<Eigen::VectorXd> weights = std::nullopt)
      : points_(std::move(points)), weights_(std::move(weights)) {
    if (weights_) {
      if (weights_->size() != points_.rows())
        throw std::invalid_argument("PointSet: weight count differs from point count");
      for (Eigen::Index i = 0; i < weights_->size(); ++i)
        if (!((*weights_)(i) >= 0.0)) throw std::invalid_argument("PointSet: negative weight");
    }
  }

  Eigen::Index size() const { return points_.rows(); }
  int dim() const { return static_cast<int>(points_.cols()); }
  const PointMatrix& points() const { return points_; }
  std::span<const double> point(Eigen::Index i) const { return row_span(points_, i); }
  bool weighted() const { return weights_.has_value(); }
  const std::optional<Eigen::VectorXd>& weights() const { return weights_; }

  /// Effective weights: the stored ones, or 1/m each.
  Eigen::VectorXd effective_weights() const {
    if (weights_) return *weights_;
    return Eigen::VectorXd::Constant(size(), size() > 0 ? 1.0 / static_cast<double>(size()) : 0.0);
  }

  /// Number of points carrying a nonzero weight.
  Eigen::Index support_size() const {
    if (!weights_) return size();
    return static_cast<Eigen::Index>((weights_->array() != 0.0).count());
  }

  /// True if every coordinate lies in [0, 2pi).
  bool on_torus() const {
    return (points_.array() >= 0.0).all() && (points_.array() < kTwoPi).all();
  }

private:
  PointMatrix points_;
  std::optional<Eigen::VectorXd> weights_;
};

/// Tensor grid with nodes 2 pi n_j / L_j, n_j = 0..L_j-1.
inline PointMatrix tensor_grid(std::span<const int> sizes) {
  if (sizes.empty()) throw std::invalid_argument("tensor_grid: empty size list");
  Eigen::Index total = 1;
  for (int L : sizes) {
    if (L < 1) throw std::invalid_argument("tensor_grid: axis size must be positive");
    total *= L;
  }
  const auto d = static_cast<Eigen::Index>(sizes.size());
  PointMatrix pts(total, d);
  for (Eigen::Index row = 0; row < total; ++row) {
    Eigen::Index rem = row;
    for (Eigen::Index j = d - 1; j >= 0; --j) {
      const int L = sizes[static_cast<std::size_t>(j)];
      pts(row, j) = kTwoPi * static_cast<double>(rem % L) / L;
      rem /= L;
    }
  }
  return pts;
}

/// The grid P(N): x^n = (2 pi n_1/(2N_1+1), ...), theta(N) = prod(2N_j+1) points.
inline PointSet grid_P(std::span<const int> box) {
  std::vector<int> sizes;
  for (int n : box) {
    if (n < 0) throw std::invalid_argument("grid_P: negative box extent");
    sizes.push_back(2 * n + 1);
  }
  return PointSet(tensor_grid(sizes));
}

}  // namespace mdisc
