#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdisc {

using Frequency = std::vector<int>;

/// Finite set of integer frequency vectors in Z^d, stored sorted and
/// deduplicated. The order of freqs() is the coefficient order used by every
/// polynomial built over the set.
class FrequencySet {
public:
  FrequencySet() = default;

  FrequencySet(int dim, const std::vector<Frequency>& freqs) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("FrequencySet: dimension must be positive");
    std::set<Frequency> unique;
    for (const auto& k : freqs) {
      if (static_cast<int>(k.size()) != dim)
        throw std::invalid_argument("FrequencySet: frequency of dimension " +
                                    std::to_string(k.size()) + " in a set of dimension " +
                                    std::to_string(dim));
      unique.insert(k);
    }
    freqs_.assign(unique.begin(), unique.end());
    for (std::size_t i = 0; i < freqs_.size(); ++i) index_.emplace(freqs_[i], i);
    symmetric_ = std::all_of(freqs_.begin(), freqs_.end(),
                             [this](const Frequency& k) { return contains(negate(k)); });
  }

  int dim() const { return dim_; }
  std::size_t size() const { return freqs_.size(); }
  bool empty() const { return freqs_.empty(); }
  const std::vector<Frequency>& freqs() const { return freqs_; }
  const Frequency& operator[](std::size_t i) const { return freqs_[i]; }

  /// True iff k in the set implies -k in the set.
  bool symmetric() const { return symmetric_; }

  bool contains(const Frequency& k) const { return index_.count(k) != 0; }

  std::optional<std::size_t> index_of(const Frequency& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Componentwise max |k_j| over the set (zeros for an empty set).
  std::vector<int> max_abs_per_axis() const {
    std::vector<int> out(static_cast<std::size_t>(dim_), 0);
    for (const auto& k : freqs_)
      for (int j = 0; j < dim_; ++j) out[j] = std::max(out[j], std::abs(k[j]));
    return out;
  }

  int max_abs() const {
    auto per_axis = max_abs_per_axis();
    return per_axis.empty() ? 0 : *std::max_element(per_axis.begin(), per_axis.end());
  }

  /// Q is a subset of the box Pi(N) = [-N_1,N_1] x ... x [-N_d,N_d].
  bool within_box(std::span<const int> box) const {
    if (static_cast<int>(box.size()) != dim_) return false;
    auto per_axis = max_abs_per_axis();
    for (int j = 0; j < dim_; ++j)
      if (per_axis[j] > box[j]) return false;
    return true;
  }

  bool is_subset_of(const FrequencySet& other) const {
    return dim_ == other.dim_ &&
           std::all_of(freqs_.begin(), freqs_.end(),
                       [&](const Frequency& k) { return other.contains(k); });
  }

  friend bool operator==(const FrequencySet& a, const FrequencySet& b) {
    return a.dim_ == b.dim_ && a.freqs_ == b.freqs_;
  }

  static Frequency negate(Frequency k) {
    for (auto& c : k) c = -c;
    return k;
  }

private:
  int dim_ = 1;
  std::vector<Frequency> freqs_;
  std::map<Frequency, std::size_t> index_;
  bool symmetric_ = true;
};

namespace detail {

// Cartesian product of per-axis integer lists.
inline std::vector<Frequency> cartesian(const std::vector<std::vector<int>>& axes) {
  std::vector<Frequency> out{Frequency{}};
  for (const auto& axis : axes) {
    std::vector<Frequency> next;
    next.reserve(out.size() * axis.size());
    for (const auto& prefix : out)
      for (int v : axis) {
        Frequency k = prefix;
        k.push_back(v);
        next.push_back(std::move(k));
      }
    out = std::move(next);
  }
  return out;
}

inline void compositions(int dim, int budget, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == dim) {
    out.push_back(current);
    return;
  }
  for (int s = 0; s <= budget; ++s) {
    current.push_back(s);
    compositions(dim, budget - s, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// Box Pi(N): all k with |k_j| <= N_j.
inline FrequencySet build_box(int dim, std::span<const int> box) {
  if (static_cast<int>(box.size()) != dim)
    throw std::invalid_argument("build_box: box has " + std::to_string(box.size()) +
                                " entries for dimension " + std::to_string(dim));
  std::vector<std::vector<int>> axes;
  for (int n : box) {
    if (n < 0) throw std::invalid_argument("build_box: negative box extent");
    std::vector<int> axis;
    for (int k = -n; k <= n; ++k) axis.push_back(k);
    axes.push_back(std::move(axis));
  }
  return FrequencySet(dim, detail::cartesian(axes));
}

/// Dyadic block rho(s): [2^{s_j-1}] <= |k_j| < 2^{s_j} for every coordinate.
inline FrequencySet build_dyadic_block(std::span<const int> s) {
  if (s.empty()) throw std::invalid_argument("build_dyadic_block: empty index");
  std::vector<std::vector<int>> axes;
  for (int sj : s) {
    if (sj < 0) throw std::invalid_argument("build_dyadic_block: negative level");
    if (sj > 29) throw std::invalid_argument("build_dyadic_block: level too large");
    const int lo = sj == 0 ? 0 : (1 << (sj - 1));
    const int hi = 1 << sj;
    std::vector<int> axis;
    for (int k = -(hi - 1); k <= hi - 1; ++k)
      if (std::abs(k) >= lo) axis.push_back(k);
    axes.push_back(std::move(axis));
  }
  return FrequencySet(static_cast<int>(s.size()), detail::cartesian(axes));
}

/// Hyperbolic cross Q_n: union of rho(s) over s in Z^d_+ with |s|_1 <= n.
inline FrequencySet build_hyperbolic_cross(int n, int dim) {
  if (n < 0) throw std::invalid_argument("build_hyperbolic_cross: negative level");
  if (dim < 1) throw std::invalid_argument("build_hyperbolic_cross: dimension must be positive");
  std::vector<std::vector<int>> levels;
  std::vector<int> current;
  detail::compositions(dim, n, current, levels);
  std::vector<Frequency> all;
  for (const auto& s : levels) {
    auto block = build_dyadic_block(s);
    all.insert(all.end(), block.freqs().begin(), block.freqs().end());
  }
  return FrequencySet(dim, all);
}

}  // namespace mdisc
