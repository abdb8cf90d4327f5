#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdisc/core/frequency_set.hpp"
#include "mdisc/core/norms.hpp"
#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/core/trig_polynomial.hpp"
#include "mdisc/dictionaries/delta_net.hpp"
#include "mdisc/dictionaries/dictionary.hpp"

namespace mdisc {

namespace detail {

// Grid search of score(y) followed by local refinement; exact grid ties go
// to the lowest index.
template <class Score>
std::vector<double> grid_then_refine(const Eigen::VectorXd& grid_scores, const PointMatrix& grid,
                                     const std::vector<double>& spacing, Score&& score, bool refine) {
  return refine_argmax(score, grid, grid_scores, refine ? spacing : std::vector<double>{});
}

inline int search_points_per_axis(double spacing_cap, int min_points) {
  return std::max(min_points, static_cast<int>(std::ceil(kTwoPi / spacing_cap - 1e-12)));
}

}  // namespace detail

/// D^1(Q) = {w_Q(x - y)}, y in T^d. Since <h, w_Q(. - y)> = |Q|^{-1/2} h(y),
/// selection maximises |h(y)| over the torus: a grid search with spacing at
/// most `max_spacing` (default pi / (4 max|k| + 2)) and local refinement.
class ContinuousShiftedKernelDictionary {
public:
  explicit ContinuousShiftedKernelDictionary(FrequencySet q, double max_spacing = 0.0) : q_(std::move(q)) {
    if (q_.empty()) throw std::invalid_argument("ContinuousShiftedKernelDictionary: empty frequency set");
    if (max_spacing <= 0.0) max_spacing = std::numbers::pi / (4.0 * q_.max_abs() + 2.0);
    const int per = detail::search_points_per_axis(max_spacing, 3);
    std::vector<int> sizes(static_cast<std::size_t>(q_.dim()), per);
    grid_ = tensor_grid(sizes);
    spacing_.assign(sizes.size(), kTwoPi / per);
    grid_exp_ = exponential_matrix(q_, grid_);
  }

  DictionaryKind kind() const { return DictionaryKind::ShiftedKernelContinuous; }
  Symmetry symmetry() const { return Symmetry::Phase; }
  Eigen::Index ambient_dim() const { return static_cast<Eigen::Index>(q_.size()); }
  const FrequencySet& frequencies() const { return q_; }

  Vec<cplx> atom_at(std::span<const double> y) const {
    const double scale = 1.0 / std::sqrt(static_cast<double>(q_.size()));
    Vec<cplx> a(ambient_dim());
    for (std::size_t i = 0; i < q_.size(); ++i)
      a(static_cast<Eigen::Index>(i)) = scale * std::polar(1.0, -phase(q_[i], y));
    return a;
  }

  /// Exact supremum search up to refinement tolerance, so every weakness
  /// t in (0, 1] is honoured.
  Selection<cplx> select(const Vec<cplx>& r, double weakness = 1.0, Symmetry sym = Symmetry::Phase) const {
    if (!(weakness > 0.0 && weakness <= 1.0))
      throw std::invalid_argument("weakness parameter must lie in (0, 1]");
    if (r.size() != ambient_dim()) throw std::invalid_argument("select: residual outside the ambient space");
    const Eigen::VectorXcd vals = grid_exp_ * r;
    Eigen::VectorXd scores(vals.size());
    for (Eigen::Index j = 0; j < vals.size(); ++j) scores(j) = detail::symmetrized_score(vals(j), sym);
    auto score = [&](std::span<const double> y) {
      cplx h{0.0, 0.0};
      for (std::size_t i = 0; i < q_.size(); ++i)
        h += r(static_cast<Eigen::Index>(i)) * std::polar(1.0, phase(q_[i], y));
      return detail::symmetrized_score(h, sym);
    };
    std::vector<double> y = detail::grid_then_refine(scores, grid_, spacing_, score, true);
    Selection<cplx> s;
    s.parameter = y;
    const Vec<cplx> raw = atom_at(y);
    const cplx ip = raw.dot(r);
    s.multiplier = detail::symmetry_multiplier(ip, sym);
    s.atom = raw * s.multiplier;
    s.score = detail::symmetrized_score(ip, sym);
    return s;
  }

private:
  FrequencySet q_;
  PointMatrix grid_;
  std::vector<double> spacing_;
  Eigen::MatrixXcd grid_exp_;
};

/// D^0 = {g_y}, g_y = (K2 N)^{-1/2} D_N(., y), y in Omega. <h, g_y> is
/// (K2 N)^{-1/2} h(y), so selection maximises |h(y)|. On the torus the search
/// grid spacing is min(delta_0, quadrature spacing / 2); on a discrete domain
/// the search is exhaustive over the nodes. The system must outlive the
/// dictionary.
class ContinuousKernelDictionary {
public:
  explicit ContinuousKernelDictionary(const OrthonormalSystem& system)
      : system_(&system), scale_(kernel_scale_of(system)) {
    if (system.domain() == DomainKind::Discrete) {
      grid_ = system.quadrature().nodes();
      grid_values_ = system.node_values();
      return;
    }
    double cap = kTwoPi;
    for (double h : system.quadrature().spacing()) cap = std::min(cap, 0.5 * h);
    int per = detail::search_points_per_axis(cap, 3);
    if (system.constants().K1 && system.constants().alpha && system.constants().beta) {
      // delta_0 spacing unless the grid table would exceed ~5e7 entries;
      // refinement then recovers the peak from the coarser grid
      const int fine = detail::search_points_per_axis(std::min(cap, choose_delta0(system)), 3);
      if (std::pow(static_cast<double>(fine), system.dim()) * system.size() <= 5e7) per = fine;
    }
    std::vector<int> sizes(static_cast<std::size_t>(system.dim()), per);
    grid_ = tensor_grid(sizes);
    spacing_.assign(sizes.size(), kTwoPi / per);
    grid_values_ = system.evaluate(grid_);
  }

  DictionaryKind kind() const { return DictionaryKind::KernelContinuous; }
  Symmetry symmetry() const { return Symmetry::Sign; }
  Eigen::Index ambient_dim() const { return system_->size(); }
  double scale() const { return scale_; }
  const PointMatrix& search_grid() const { return grid_; }

  Vec<double> atom_at(std::span<const double> y) const { return system_->evaluate(y) * scale_; }

  Selection<double> select(const Vec<double>& r, double weakness = 1.0, Symmetry sym = Symmetry::Sign) const {
    if (!(weakness > 0.0 && weakness <= 1.0))
      throw std::invalid_argument("weakness parameter must lie in (0, 1]");
    if (r.size() != ambient_dim()) throw std::invalid_argument("select: residual outside the ambient space");
    const Eigen::VectorXd vals = grid_values_ * r;
    Eigen::VectorXd scores(vals.size());
    for (Eigen::Index j = 0; j < vals.size(); ++j) scores(j) = detail::symmetrized_score(vals(j), sym);
    auto score = [&](std::span<const double> y) { return detail::symmetrized_score(system_->value(r, y), sym); };
    std::vector<double> y = detail::grid_then_refine(scores, grid_, spacing_, score, !spacing_.empty());
    Selection<double> s;
    s.parameter = y;
    const Vec<double> raw = atom_at(y);
    const double ip = raw.dot(r);
    s.multiplier = detail::symmetry_multiplier(ip, sym);
    s.atom = raw * s.multiplier;
    s.score = detail::symmetrized_score(ip, sym);
    return s;
  }

private:
  static double kernel_scale_of(const OrthonormalSystem& system) {
    const auto& c = system.constants();
    if (!c.K2) throw std::invalid_argument("ContinuousKernelDictionary: system does not declare K2");
    return 1.0 / std::sqrt(*c.K2 * system.size());
  }

  const OrthonormalSystem* system_;
  double scale_;
  PointMatrix grid_;
  std::vector<double> spacing_;
  Eigen::MatrixXd grid_values_;
};

}  // namespace mdisc
