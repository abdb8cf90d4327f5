// Random point sets of growing size, checked against the L1 targets (1/2, 3/2).

#include <cstdio>

#include "mdisc/mdisc.hpp"

using namespace mdisc;

int main() {
  const OrthonormalSystem s = real_trig_system(build_hyperbolic_cross(2, 1));
  const L1Effort effort{.restarts = 40, .iterations = 200};
  std::printf("%6s %8s %8s %5s\n", "m", "r_min", "r_max", "pass");
  for (int m : {1, 4, 16, 64, 256, 1024}) {
    const PointSet z = random_l1_pointset(s, m, 5);
    const L1Certificate c = certify_l1(z, s, {}, effort);
    std::printf("%6d %8.4f %8.4f %5s\n", m, c.r_min, c.r_max, c.pass ? "yes" : "no");
  }

  // the budget the chaining argument asks for, for comparison
  const FrequencySet q = build_hyperbolic_cross(2, 1);
  const long long need = min_m_chaining(chaining_params_trig(q, 2, 0.25));
  std::printf("\nchaining budget at eta = 1/4: m = %lld\n", need);
}
