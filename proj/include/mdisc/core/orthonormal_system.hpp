#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdisc/core/frequency_set.hpp"
#include "mdisc/core/norms.hpp"
#include "mdisc/core/quadrature.hpp"
#include "mdisc/core/random.hpp"
#include "mdisc/core/trig_polynomial.hpp"

namespace mdisc {

/// Constants a system may declare. Missing values mean "unknown".
///   K1, alpha, beta : |u_i(x) - u_i(y)| <= K1 N^beta |x - y|_inf^alpha
///   K2              : |u_i|_inf^2 <= K2
///   K3, K4          : |f|_inf <= K3 N^{K4/p} |f|_p, p in [2, inf)
///   t               : w(x) = sum_i u_i(x)^2 <= N t^2
struct SystemConstants {
  std::optional<double> K1, K2, K3, K4, alpha, beta, t;
};

enum class DomainKind { Torus, Discrete };

/// N real functions orthonormal with respect to a probability measure given
/// by a quadrature rule (the trapezoid grid on T^d, or the uniform measure on
/// a finite set Omega_M).
class OrthonormalSystem {
public:
  using Evaluator = std::function<void(std::span<const double>, std::span<double>)>;

  OrthonormalSystem(std::string name, int dim, int size, DomainKind domain, Evaluator eval,
                    Quadrature quad, SystemConstants constants, bool condition_d)
      : name_(std::move(name)),
        dim_(dim),
        size_(size),
        domain_(domain),
        eval_(std::move(eval)),
        quad_(std::move(quad)),
        constants_(constants),
        condition_d_(condition_d) {
    if (dim_ < 1 || size_ < 1) throw std::invalid_argument("OrthonormalSystem: empty system");
    if (quad_.dim() != dim_) throw std::invalid_argument("OrthonormalSystem: quadrature dimension mismatch");
    node_values_ = evaluate(quad_.nodes());
  }

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  /// N, the number of functions.
  int size() const { return size_; }
  DomainKind domain() const { return domain_; }
  const Quadrature& quadrature() const { return quad_; }
  const SystemConstants& constants() const { return constants_; }
  bool condition_d() const { return condition_d_; }

  /// Values u_i at the quadrature nodes, one row per node.
  const Eigen::MatrixXd& node_values() const { return node_values_; }

  Eigen::VectorXd evaluate(std::span<const double> x) const {
    Eigen::VectorXd out(size_);
    eval_(x, std::span<double>(out.data(), static_cast<std::size_t>(size_)));
    return out;
  }

  Eigen::MatrixXd evaluate(const PointMatrix& pts) const {
    Eigen::MatrixXd out(pts.rows(), size_);
    Eigen::VectorXd row(size_);
    for (Eigen::Index j = 0; j < pts.rows(); ++j) {
      eval_(row_span(pts, j), std::span<double>(row.data(), static_cast<std::size_t>(size_)));
      out.row(j) = row.transpose();
    }
    return out;
  }

  /// f(x) for f = sum_i b_i u_i.
  double value(const Eigen::VectorXd& coeffs, std::span<const double> x) const {
    return evaluate(x).dot(coeffs);
  }

  /// Christoffel-type diagonal w(x) = sum_i u_i(x)^2.
  double christoffel(std::span<const double> x) const { return evaluate(x).squaredNorm(); }

  Eigen::MatrixXd gram() const {
    return node_values_.transpose() * quad_.weights().asDiagonal() * node_values_;
  }

  /// Checks orthonormality under the quadrature and the declared conditions D
  /// and E at every node; throws std::logic_error on failure.
  void validate(double tol = 1e-8) const {
    const Eigen::MatrixXd g = gram();
    const double dev = (g - Eigen::MatrixXd::Identity(size_, size_)).cwiseAbs().maxCoeff();
    if (dev > tol)
      throw std::logic_error(name_ + ": Gram matrix deviates from identity by " + std::to_string(dev));
    const Eigen::VectorXd w = node_values_.rowwise().squaredNorm();
    if (condition_d_ && (w.array() - size_).abs().maxCoeff() > tol)
      throw std::logic_error(name_ + ": condition D (w(x) = N) fails at a node");
    if (constants_.t) {
      const double cap = size_ * (*constants_.t) * (*constants_.t);
      if (w.maxCoeff() > cap + tol) throw std::logic_error(name_ + ": condition E (w(x) <= N t^2) fails at a node");
    }
  }

  /// m i.i.d. draws from the measure: uniform on T^d, or uniform over the nodes
  /// of a discrete domain.
  PointMatrix sample(Eigen::Index m, Rng& rng) const {
    if (domain_ == DomainKind::Torus) return uniform_torus_points(m, dim_, rng);
    std::uniform_int_distribution<Eigen::Index> pick(0, quad_.size() - 1);
    PointMatrix pts(m, dim_);
    for (Eigen::Index i = 0; i < m; ++i) pts.row(i) = quad_.nodes().row(pick(rng));
    return pts;
  }

  double norm_lp(const Eigen::VectorXd& coeffs, double p) const {
    check_exponent(p);
    const Eigen::VectorXd values = node_values_ * coeffs;
    if (!std::isinf(p)) return lp_norm(values, quad_.weights(), p);
    if (domain_ == DomainKind::Discrete) return values.cwiseAbs().maxCoeff();
    return sup_norm([&](std::span<const double> x) { return std::abs(value(coeffs, x)); }, quad_, values);
  }

  double norm_inf(const Eigen::VectorXd& coeffs) const { return norm_lp(coeffs, kInf); }

  /// Copy restricted to a finite node set with the uniform measure.
  OrthonormalSystem restricted_to(PointMatrix nodes, std::string name) const {
    return OrthonormalSystem(std::move(name), dim_, size_, DomainKind::Discrete, eval_,
                             Quadrature::uniform(std::move(nodes)), constants_, condition_d_);
  }

  OrthonormalSystem with_constants(SystemConstants c) const {
    OrthonormalSystem copy = *this;
    copy.constants_ = c;
    return copy;
  }

private:
  std::string name_;
  int dim_;
  int size_;
  DomainKind domain_;
  Evaluator eval_;
  Quadrature quad_;
  SystemConstants constants_;
  bool condition_d_;
  Eigen::MatrixXd node_values_;
};

/// Representative frequencies of a symmetric set: zero (if present) first, then
/// one k per pair {k, -k}, taking the one whose first nonzero entry is positive.
inline std::vector<Frequency> half_frequencies(const FrequencySet& q) {
  std::vector<Frequency> out;
  for (const auto& k : q.freqs()) {
    auto nz = std::find_if(k.begin(), k.end(), [](int c) { return c != 0; });
    if (nz == k.end() || *nz > 0) out.push_back(k);
  }
  std::stable_partition(out.begin(), out.end(), [](const Frequency& k) {
    return std::all_of(k.begin(), k.end(), [](int c) { return c == 0; });
  });
  return out;
}

/// Real orthonormal trigonometric system for a symmetric Q:
/// {1 if 0 in Q} and {sqrt2 cos(k,x), sqrt2 sin(k,x)} for one k per pair {k,-k}.
/// N = |Q| and w(x) = N identically.
inline OrthonormalSystem real_trig_system(const FrequencySet& q, int oversampling = 4) {
  if (!q.symmetric()) throw std::invalid_argument("real_trig_system: frequency set is not symmetric");
  if (q.empty()) throw std::invalid_argument("real_trig_system: empty frequency set");
  auto half = std::make_shared<const std::vector<Frequency>>(half_frequencies(q));
  const int n = static_cast<int>(q.size());
  auto eval = [half](std::span<const double> x, std::span<double> out) {
    std::size_t idx = 0;
    for (const auto& k : *half) {
      if (std::all_of(k.begin(), k.end(), [](int c) { return c == 0; })) {
        out[idx++] = 1.0;
        continue;
      }
      const double ph = phase(k, x);
      out[idx++] = std::numbers::sqrt2 * std::cos(ph);
      out[idx++] = std::numbers::sqrt2 * std::sin(ph);
    }
  };
  const bool only_constant = n == 1;
  int max_l1 = 0;
  for (const auto& k : q.freqs()) {
    int s = 0;
    for (int c : k) s += std::abs(c);
    max_l1 = std::max(max_l1, s);
  }
  // Box Nikol'skii bound scaled by theta(box)/|Q|.
  double box_count = 1.0;
  for (int a : q.max_abs_per_axis()) box_count *= 2.0 * a + 1.0;
  SystemConstants c;
  c.K1 = std::numbers::sqrt2 * std::max(max_l1, 1);
  c.alpha = 1.0;
  c.beta = 0.0;
  c.K2 = only_constant ? 1.0 : 2.0;
  c.K3 = std::pow(3.0, q.dim()) * box_count / n;
  c.K4 = 1.0;
  c.t = 1.0;
  return OrthonormalSystem("trig" + std::to_string(q.dim()) + "d_N" + std::to_string(n), q.dim(), n,
                           DomainKind::Torus, eval, quadrature_for(q, oversampling), c, true);
}

/// Complex coefficients over Q of the real-basis expansion sum_i b_i u_i.
inline TrigPolynomial to_trig_polynomial(const FrequencySet& q, const Eigen::VectorXd& b) {
  const auto half = half_frequencies(q);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(q.size()));
  Eigen::Index idx = 0;
  for (const auto& k : half) {
    const auto pos = static_cast<Eigen::Index>(*q.index_of(k));
    if (std::all_of(k.begin(), k.end(), [](int v) { return v == 0; })) {
      c(pos) = b(idx++);
      continue;
    }
    const auto neg = static_cast<Eigen::Index>(*q.index_of(FrequencySet::negate(k)));
    const double bc = b(idx++);
    const double bs = b(idx++);
    c(pos) = cplx(bc, -bs) / std::numbers::sqrt2;
    c(neg) = cplx(bc, bs) / std::numbers::sqrt2;
  }
  return TrigPolynomial(q, std::move(c));
}

/// Inverse of to_trig_polynomial for real-valued polynomials.
inline Eigen::VectorXd to_real_coefficients(const TrigPolynomial& f) {
  const auto& q = f.support();
  const auto half = half_frequencies(q);
  Eigen::VectorXd b(static_cast<Eigen::Index>(q.size()));
  Eigen::Index idx = 0;
  for (const auto& k : half) {
    const cplx c = f.coeff(k);
    if (std::all_of(k.begin(), k.end(), [](int v) { return v == 0; })) {
      b(idx++) = c.real();
      continue;
    }
    b(idx++) = std::numbers::sqrt2 * c.real();
    b(idx++) = -std::numbers::sqrt2 * c.imag();
  }
  return b;
}

}  // namespace mdisc
