#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "mdisc/core/point_set.hpp"

namespace mdisc {

enum class DictionaryKind {
  ShiftedKernelContinuous,  // D^1(Q) = {w_Q(x - y)}, y in T^d
  ShiftedKernelGrid,        // D^2(Q) = {w_Q(x - x^n)}, n in P(N), or over a delta-net
  Exponentials,             // D^T(Q) = {e^{i(k,x)}}
  Union,                    // D^3(Q) = D^2(Q) u D^T(Q), and D^1 u D^2 for general systems
  KernelContinuous,         // D^0 = {g_y}, g_y = (K2 N)^{-1/2} D_N(., y)
  KernelNet,                // D^1 = {g_{y^j}} over a delta-net
  ScaledBasis,              // D^2 = {+-g_i}, g_i = u_i K2^{-1/2}
  MatrixAtoms,              // D^u = {G(x) / (N t^2)}
};

inline std::string to_string(DictionaryKind k) {
  switch (k) {
    case DictionaryKind::ShiftedKernelContinuous: return "shifted-kernel-continuous";
    case DictionaryKind::ShiftedKernelGrid: return "shifted-kernel-grid";
    case DictionaryKind::Exponentials: return "exponentials";
    case DictionaryKind::Union: return "union";
    case DictionaryKind::KernelContinuous: return "kernel-continuous";
    case DictionaryKind::KernelNet: return "kernel-net";
    case DictionaryKind::ScaledBasis: return "scaled-basis";
    case DictionaryKind::MatrixAtoms: return "matrix-atoms";
  }
  return "unknown";
}

/// How atoms are symmetrized during selection:
///   None  - the dictionary itself, maximise Re<r, g>;
///   Sign  - D^+- = {+-g}, maximise |<r, g>| over real atoms;
///   Phase - D^s = {e^{i theta} g}, maximise |<r, g>| over complex atoms.
enum class Symmetry { None, Sign, Phase };

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// The atom picked by a greedy step. `atom` already carries the sign or phase
/// so that <r, atom> = score >= 0 (for Sign/Phase symmetry).
template <class Scalar>
struct Selection {
  Eigen::Index index = -1;         // -1 for continuous dictionaries
  std::vector<double> parameter;   // shift / node of the atom, when meaningful
  Vec<Scalar> atom;
  Scalar multiplier{1};            // sign or unit phase applied to the raw atom
  double score = 0.0;              // Re <r, atom>
};

namespace detail {

template <class Scalar>
inline double symmetrized_score(Scalar ip, Symmetry sym) {
  if (sym == Symmetry::None) return std::real(ip);
  return std::abs(ip);
}

template <class Scalar>
inline Scalar symmetry_multiplier(Scalar ip, Symmetry sym) {
  if (sym == Symmetry::None) return Scalar(1);
  if constexpr (std::is_same_v<Scalar, double>) {
    return ip < 0 ? -1.0 : 1.0;
  } else {
    if (sym == Symmetry::Sign) return std::real(ip) < 0 ? Scalar(-1) : Scalar(1);
    const double a = std::abs(ip);
    return a > 0 ? ip / a : Scalar(1);
  }
}

/// Index of the first entry >= weakness * max (lowest index among ties).
inline Eigen::Index weak_argmax(const Eigen::VectorXd& scores, double weakness) {
  if (scores.size() == 0) throw std::invalid_argument("argmax over an empty dictionary");
  if (!(weakness > 0.0 && weakness <= 1.0))
    throw std::invalid_argument("weakness parameter must lie in (0, 1]");
  Eigen::Index best = 0;
  const double top = scores.maxCoeff(&best);
  if (weakness == 1.0 || top <= 0.0) {
    for (Eigen::Index j = 0; j < scores.size(); ++j)
      if (scores(j) == top) return j;
    return best;
  }
  const double threshold = weakness * top;
  for (Eigen::Index j = 0; j < scores.size(); ++j)
    if (scores(j) >= threshold) return j;
  return best;
}

}  // namespace detail

/// Finite dictionary in a coefficient Hilbert space: atoms are the columns of
/// a dense matrix and <f, g> = g^H f. Optional per-atom parameters (grid node,
/// net node) are kept alongside.
template <class Scalar>
class FiniteDictionary {
public:
  FiniteDictionary(DictionaryKind kind, Mat<Scalar> atoms, Symmetry symmetry, PointMatrix params = {})
      : kind_(kind), atoms_(std::move(atoms)), symmetry_(symmetry), params_(std::move(params)) {
    if (params_.rows() != 0 && params_.rows() != atoms_.cols())
      throw std::invalid_argument("FiniteDictionary: parameter rows differ from atom count");
  }

  DictionaryKind kind() const { return kind_; }
  Symmetry symmetry() const { return symmetry_; }
  Eigen::Index size() const { return atoms_.cols(); }
  Eigen::Index ambient_dim() const { return atoms_.rows(); }
  const Mat<Scalar>& atoms() const { return atoms_; }
  auto atom(Eigen::Index j) const { return atoms_.col(j); }
  const PointMatrix& parameters() const { return params_; }

  std::vector<double> parameter(Eigen::Index j) const {
    if (params_.rows() == 0) return {};
    auto p = row_span(params_, j);
    return {p.begin(), p.end()};
  }

  Eigen::VectorXd atom_norms() const { return atoms_.colwise().norm().transpose(); }

  /// <r, g_j> for every atom.
  Vec<Scalar> inner_products(const Vec<Scalar>& r) const { return atoms_.adjoint() * r; }

  Selection<Scalar> select(const Vec<Scalar>& r, double weakness = 1.0) const {
    return select(r, weakness, symmetry_);
  }

  Selection<Scalar> select(const Vec<Scalar>& r, double weakness, Symmetry sym) const {
    if (size() == 0) throw std::invalid_argument("select: empty dictionary");
    if (r.size() != ambient_dim()) throw std::invalid_argument("select: residual outside the ambient space");
    const Vec<Scalar> ip = inner_products(r);
    Eigen::VectorXd scores(ip.size());
    for (Eigen::Index j = 0; j < ip.size(); ++j) scores(j) = detail::symmetrized_score(ip(j), sym);
    Selection<Scalar> s;
    s.index = detail::weak_argmax(scores, weakness);
    s.multiplier = detail::symmetry_multiplier(ip(s.index), sym);
    s.atom = atoms_.col(s.index) * s.multiplier;
    s.score = scores(s.index);
    s.parameter = parameter(s.index);
    return s;
  }

private:
  DictionaryKind kind_;
  Mat<Scalar> atoms_;
  Symmetry symmetry_;
  PointMatrix params_;
};

/// Flat union of two dictionaries over the same ambient space; indices of the
/// second follow those of the first.
template <class Scalar>
FiniteDictionary<Scalar> union_dictionary(const FiniteDictionary<Scalar>& a, const FiniteDictionary<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("union_dictionary: ambient dimensions differ");
  Mat<Scalar> atoms(a.ambient_dim(), a.size() + b.size());
  atoms << a.atoms(), b.atoms();
  PointMatrix params;
  const bool pa = a.parameters().rows() != 0;
  const bool pb = b.parameters().rows() != 0;
  if (pa || pb) {
    const Eigen::Index d = pa ? a.parameters().cols() : b.parameters().cols();
    params = PointMatrix::Constant(a.size() + b.size(), d, std::nan(""));
    if (pa) params.topRows(a.size()) = a.parameters();
    if (pb) params.bottomRows(b.size()) = b.parameters();
  }
  return FiniteDictionary<Scalar>(DictionaryKind::Union, std::move(atoms), a.symmetry(), std::move(params));
}

/// t-weak argmax of |<residual, g>| over the dictionary (exact max when t = 1).
template <class Dict, class V>
auto argmax_inner_product(const Dict& dict, const V& residual, double weakness = 1.0) {
  return dict.select(residual, weakness);
}

}  // namespace mdisc
