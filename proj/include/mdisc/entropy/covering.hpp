#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace mdisc {

/// Greedy packing of a finite sample: scan in order and keep an element when
/// its sup-distance to every kept element exceeds eps. The kept set is
/// eps-separated, so its size is a lower bound on N_{eps/2} of the sample (and
/// of any set containing it). Elements are value vectors on a common grid.
inline std::size_t empirical_covering(const std::vector<Eigen::VectorXd>& sample, double eps) {
  if (sample.empty()) throw std::invalid_argument("empirical_covering: empty sample");
  if (!(eps > 0.0)) throw std::invalid_argument("empirical_covering: eps must be positive");
  std::vector<const Eigen::VectorXd*> kept;
  for (const auto& v : sample) {
    bool separated = true;
    for (const auto* c : kept)
      if ((v - *c).cwiseAbs().maxCoeff() <= eps) {
        separated = false;
        break;
      }
    if (separated) kept.push_back(&v);
  }
  return kept.size();
}

}  // namespace mdisc
