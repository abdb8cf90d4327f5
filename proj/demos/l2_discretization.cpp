// Three ways to discretize the L2 norm of the real trig system on a
// hyperbolic cross: random sampling, Frobenius RGA and BSS weights.

#include <cstdio>
#include <vector>

#include "mdisc/mdisc.hpp"

using namespace mdisc;

int main() {
  const FrequencySet q = build_hyperbolic_cross(3, 1);
  const OrthonormalSystem s = real_trig_system(q);
  const int n = s.size();
  std::printf("system %s, N = %d\n\n", s.name().c_str(), n);

  std::printf("%-14s %6s %10s %10s %10s\n", "method", "m", "lambda_min", "lambda_max", "eps");
  for (int factor : {2, 8, 32}) {
    const auto [ps, c] = random_l2_pointset(s, factor * n, 1);
    std::printf("%-14s %6lld %10.4f %10.4f %10.4f\n", "random", static_cast<long long>(ps.size()), c.lambda_min,
                c.lambda_max, c.eps);
  }
  for (int m : {16, 64, 256}) {
    const auto r = frobenius_rga_identity(s, m);
    std::printf("%-14s %6d %10.4f %10.4f %10.4f\n", "frobenius-rga", m, r.certificate.lambda_min,
                r.certificate.lambda_max, r.certificate.eps);
  }

  // BSS works on a finite domain; here an 8N-point uniform grid.
  const OrthonormalSystem omega = s.restricted_to(tensor_grid(std::vector<int>{8 * n}), "omega");
  for (double d : {2.0, 4.0}) {
    const BssResult b = bss_weighted_sparsify(omega, d);
    std::printf("%-14s %6lld %10.4f %10.4f  ratio %.3f (bound %.3f)\n", d == 2.0 ? "bss d=2" : "bss d=4",
                static_cast<long long>(b.support.size()), b.certificate.lambda_min, b.certificate.lambda_max,
                b.certificate.ratio(), b.ratio_bound);
  }
}
