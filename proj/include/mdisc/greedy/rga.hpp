#pragma once

#include <stdexcept>

#include "mdisc/greedy/greedy_run.hpp"

namespace mdisc {

/// Relaxed greedy algorithm G_k = (1 - 1/k) G_{k-1} + g_k / k, with g_k the
/// atom maximising <f_{k-1}, g> over the dictionary (sign or phase included
/// according to its symmetry). `scale` runs the algorithm on f / scale and
/// scales the output back, so f in A_1(D, scale) gives residual <= 2 scale / sqrt(m).
/// Every selected atom ends with coefficient scale / m.
template <class Dict, class Scalar>
GreedyRun<Scalar> rga(const Vec<Scalar>& f, const Dict& dict, int m, double scale = 1.0) {
  if (m < 0) throw std::invalid_argument("rga: negative iteration count");
  if (!(scale > 0.0)) throw std::invalid_argument("rga: scale must be positive");
  GreedyRun<Scalar> run;
  run.algorithm = "rga";
  run.dictionary = dict.kind();
  run.m = m;
  const Vec<Scalar> target = f / scale;
  Vec<Scalar> g = Vec<Scalar>::Zero(f.size());
  for (int k = 1; k <= m; ++k) {
    Selection<Scalar> s = dict.select(Vec<Scalar>(target - g), 1.0);
    const double inv = 1.0 / k;
    g = (1.0 - inv) * g + inv * s.atom;
    run.indices.push_back(s.index);
    run.parameters.push_back(s.parameter);
    run.atoms.push_back(std::move(s.atom));
    run.residual_norms.push_back(scale * (target - g).norm());
  }
  run.coefficients = Vec<Scalar>::Constant(m, Scalar(m > 0 ? scale / m : 0.0));
  run.approximant = scale * g;
  run.residual = f - run.approximant;
  return run;
}

}  // namespace mdisc
