#pragma once

#include <stdexcept>

#include "mdisc/greedy/greedy_run.hpp"

namespace mdisc {

inline constexpr double kProjectionRidge = 1e-12;

/// Weak orthogonal greedy algorithm: pick phi_k with |<f_{k-1}, phi_k>| at least
/// t times the supremum, then project f onto span(phi_1..phi_k). The
/// projection solves the normal equations with a 1e-12 ridge so that repeated
/// atoms do not make the system singular.
template <class Dict, class Scalar>
GreedyRun<Scalar> oga(const Vec<Scalar>& f, const Dict& dict, double weakness, int m) {
  if (m < 0) throw std::invalid_argument("oga: negative iteration count");
  if (!(weakness > 0.0 && weakness <= 1.0)) throw std::invalid_argument("oga: weakness must lie in (0, 1]");
  GreedyRun<Scalar> run;
  run.algorithm = weakness == 1.0 ? "oga" : "woga";
  run.dictionary = dict.kind();
  run.m = m;
  const Eigen::Index n = f.size();
  Mat<Scalar> basis(n, 0);
  Vec<Scalar> coef;
  Vec<Scalar> residual = f;
  const double tiny = 1e-15 * std::max(1.0, f.norm());
  for (int k = 1; k <= m; ++k) {
    if (residual.norm() <= tiny) {
      run.residual_norms.push_back(residual.norm());
      continue;
    }
    Selection<Scalar> s = dict.select(residual, weakness);
    basis.conservativeResize(n, basis.cols() + 1);
    basis.col(basis.cols() - 1) = s.atom;
    Mat<Scalar> gram = basis.adjoint() * basis;
    gram.diagonal().array() += Scalar(kProjectionRidge);
    coef = gram.ldlt().solve(basis.adjoint() * f);
    residual = f - basis * coef;
    run.indices.push_back(s.index);
    run.parameters.push_back(s.parameter);
    run.atoms.push_back(s.atom);
    run.residual_norms.push_back(residual.norm());
  }
  run.coefficients = coef.size() ? coef : Vec<Scalar>();
  run.approximant = f - residual;
  run.residual = residual;
  return run;
}

}  // namespace mdisc
