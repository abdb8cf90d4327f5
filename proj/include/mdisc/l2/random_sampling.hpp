#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/l2/spectral.hpp"

namespace mdisc {

/// m i.i.d. draws from the measure of the system with their spectral
/// certificate. With retries > 1 the sample is redrawn and the one with the
/// smallest eps is kept.
inline std::pair<PointSet, SpectralCertificate> random_l2_pointset(const OrthonormalSystem& system, Eigen::Index m,
                                                                   std::uint64_t seed, int retries = 1) {
  if (m < 1) throw std::invalid_argument("random_l2_pointset: m must be at least 1");
  if (retries < 1) throw std::invalid_argument("random_l2_pointset: retries must be at least 1");
  Rng rng(seed);
  std::optional<std::pair<PointSet, SpectralCertificate>> best;
  for (int r = 0; r < retries; ++r) {
    PointSet ps(system.sample(m, rng));
    SpectralCertificate cert = certify_l2(system, ps);
    if (!best || cert.eps < best->second.eps) best.emplace(std::move(ps), std::move(cert));
  }
  return std::move(*best);
}

}  // namespace mdisc
