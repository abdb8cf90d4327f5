#pragma once

#include <complex>
#include <span>
#include <stdexcept>

#include <Eigen/Dense>

#include "mdisc/core/frequency_set.hpp"
#include "mdisc/core/point_set.hpp"
#include "mdisc/core/random.hpp"

namespace mdisc {

using cplx = std::complex<double>;

inline double phase(const Frequency& k, std::span<const double> x) {
  double s = 0.0;
  for (std::size_t j = 0; j < k.size(); ++j) s += k[j] * x[j];
  return s;
}

/// f(x) = sum_{k in Q} c_k e^{i(k,x)}, coefficients aligned with support.freqs().
class TrigPolynomial {
public:
  TrigPolynomial() = default;

  TrigPolynomial(FrequencySet support, Eigen::VectorXcd coeffs)
      : support_(std::move(support)), coeffs_(std::move(coeffs)) {
    if (static_cast<std::size_t>(coeffs_.size()) != support_.size())
      throw std::invalid_argument("TrigPolynomial: coefficient count differs from |Q|");
  }

  static TrigPolynomial zero(FrequencySet support) {
    const auto n = static_cast<Eigen::Index>(support.size());
    return TrigPolynomial(std::move(support), Eigen::VectorXcd::Zero(n));
  }

  const FrequencySet& support() const { return support_; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }

  cplx coeff(const Frequency& k) const {
    auto idx = support_.index_of(k);
    return idx ? coeffs_(static_cast<Eigen::Index>(*idx)) : cplx{0.0, 0.0};
  }

  cplx operator()(std::span<const double> x) const {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < support_.size(); ++i)
      s += coeffs_(static_cast<Eigen::Index>(i)) * std::polar(1.0, phase(support_[i], x));
    return s;
  }

  Eigen::VectorXcd evaluate(const PointMatrix& pts) const;

  /// Conjugate symmetry c_{-k} = conj(c_k), i.e. the polynomial is real valued.
  bool is_real(double tol = 1e-12) const {
    for (std::size_t i = 0; i < support_.size(); ++i) {
      const cplx c = coeffs_(static_cast<Eigen::Index>(i));
      const cplx partner = coeff(FrequencySet::negate(support_[i]));
      if (std::abs(partner - std::conj(c)) > tol) return false;
    }
    return true;
  }

  /// l2 norm of the coefficients, equal to the L2 norm by Parseval.
  double l2_norm() const { return coeffs_.norm(); }

private:
  FrequencySet support_;
  Eigen::VectorXcd coeffs_;
};

/// Matrix [e^{i(k,x^j)}]_{j,k}; rows are points, columns frequencies.
inline Eigen::MatrixXcd exponential_matrix(const FrequencySet& q, const PointMatrix& pts) {
  Eigen::MatrixXcd out(pts.rows(), static_cast<Eigen::Index>(q.size()));
  for (Eigen::Index j = 0; j < pts.rows(); ++j) {
    auto x = row_span(pts, j);
    for (std::size_t i = 0; i < q.size(); ++i)
      out(j, static_cast<Eigen::Index>(i)) = std::polar(1.0, phase(q[i], x));
  }
  return out;
}

inline Eigen::VectorXcd TrigPolynomial::evaluate(const PointMatrix& pts) const {
  return exponential_matrix(support_, pts) * coeffs_;
}

/// D_Q(x) = sum_{k in Q} e^{i(k,x)}.
inline cplx dirichlet_kernel(const FrequencySet& q, std::span<const double> x) {
  cplx s{0.0, 0.0};
  for (const auto& k : q.freqs()) s += std::polar(1.0, phase(k, x));
  return s;
}

/// w_Q(x) = |Q|^{-1/2} D_Q(x), unit L2 norm.
inline cplx normalized_dirichlet_kernel(const FrequencySet& q, std::span<const double> x) {
  return dirichlet_kernel(q, x) / std::sqrt(static_cast<double>(q.size()));
}

/// The translate D_Q(x - y) (scaled by `scale`) as a polynomial over Q.
inline TrigPolynomial dirichlet_polynomial(const FrequencySet& q, std::span<const double> shift,
                                           double scale = 1.0) {
  Eigen::VectorXcd c(static_cast<Eigen::Index>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i)
    c(static_cast<Eigen::Index>(i)) = scale * std::polar(1.0, -phase(q[i], shift));
  return TrigPolynomial(q, std::move(c));
}

/// Gaussian coefficients; for a real polynomial they are conjugate-symmetrized
/// (the support must then be symmetric).
inline TrigPolynomial random_trig_polynomial(const FrequencySet& q, Rng& rng, bool real = false) {
  Eigen::VectorXcd c = complex_gaussian_vector(static_cast<Eigen::Index>(q.size()), rng);
  if (real) {
    if (!q.symmetric())
      throw std::invalid_argument("random_trig_polynomial: real polynomial needs a symmetric support");
    Eigen::VectorXcd sym(c.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      const auto partner = *q.index_of(FrequencySet::negate(q[i]));
      sym(static_cast<Eigen::Index>(i)) =
          0.5 * (c(static_cast<Eigen::Index>(i)) + std::conj(c(static_cast<Eigen::Index>(partner))));
    }
    c = std::move(sym);
  }
  return TrigPolynomial(q, std::move(c));
}

/// Rebuilds f in T(Q), Q inside Pi(N), from its samples on P(N):
/// f(x) = theta(N)^{-1} sum_n f(x^n) D_Q(x - x^n).
inline TrigPolynomial reconstruct_on_grid(const TrigPolynomial& f, std::span<const int> box) {
  const auto& q = f.support();
  if (!q.within_box(box))
    throw std::invalid_argument("reconstruct_on_grid: support is not contained in Pi(N)");
  PointSet grid = grid_P(box);
  Eigen::VectorXcd samples = f.evaluate(grid.points());
  Eigen::MatrixXcd e = exponential_matrix(q, grid.points());
  Eigen::VectorXcd c = e.adjoint() * samples / static_cast<double>(grid.size());
  return TrigPolynomial(q, std::move(c));
}

}  // namespace mdisc
