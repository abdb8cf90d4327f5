#pragma once

#include <string>
#include <vector>

#include "mdisc/dictionaries/dictionary.hpp"

namespace mdisc {

/// Record of one greedy run. residual_norms[k-1] is the residual norm after k
/// steps in the norm the algorithm works in (L2 for OGA/RGA, L_p for IA).
template <class Scalar>
struct GreedyRun {
  std::string algorithm;
  DictionaryKind dictionary = DictionaryKind::Union;
  int m = 0;
  std::vector<double> residual_norms;
  std::vector<Eigen::Index> indices;              // -1 for continuous dictionaries
  std::vector<std::vector<double>> parameters;    // shift / node of each selected atom
  std::vector<Vec<Scalar>> atoms;                 // selected atoms, sign or phase applied
  Vec<Scalar> coefficients;                       // G_m = sum_k coefficients[k] * atoms[k]
  Vec<Scalar> approximant;
  Vec<Scalar> residual;

  double final_residual() const { return residual_norms.empty() ? 0.0 : residual_norms.back(); }

  /// Sum of |coefficients|, the A_1 mass of G_m.
  double coefficient_mass() const { return coefficients.cwiseAbs().sum(); }
};

}  // namespace mdisc
