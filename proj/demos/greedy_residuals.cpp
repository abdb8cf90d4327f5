// OGA and RGA residuals for a sum of two shifted Dirichlet kernels.

#include <cmath>
#include <cstdio>

#include "mdisc/mdisc.hpp"

using namespace mdisc;

int main() {
  const FrequencySet q = build_hyperbolic_cross(3, 1);
  const std::vector<int> box{8};
  const ComplexDictionary d = build_shifted_kernel_dict(q, box);
  const Vec<cplx> f = 0.7 * d.atom(2) + 0.3 * std::polar(1.0, 1.0) * d.atom(11);

  const auto o = oga(f, d, 1.0, 16);
  const auto r = rga(f, d, 16);
  std::printf("%3s %12s %12s %12s\n", "m", "oga", "rga", "2/sqrt(m)");
  for (int m = 1; m <= 16; ++m)
    std::printf("%3d %12.3e %12.3e %12.3e\n", m, o.residual_norms[m - 1], r.residual_norms[m - 1], 2.0 / std::sqrt(m));
}
