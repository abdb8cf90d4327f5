#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mdisc/core/frequency_set.hpp"
#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/l2/bss.hpp"
#include "mdisc/l2/concentration.hpp"
#include "mdisc/l2/frobenius_rga.hpp"
#include "mdisc/l2/random_sampling.hpp"
#include "mdisc/l2/spectral.hpp"

using namespace mdisc;

namespace {

OrthonormalSystem cross(int n) { return real_trig_system(build_hyperbolic_cross(n, 1)); }

OrthonormalSystem on_grid(const OrthonormalSystem& s, int points) {
  std::vector<int> sizes(static_cast<std::size_t>(s.dim()), points);
  return s.restricted_to(tensor_grid(sizes), s.name() + "_grid");
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

TEST(Spectral, FullGridIsExact) {
  for (int d : {1, 2})
    for (int n = 1; n <= 4; ++n) {
      const std::vector<int> box(static_cast<std::size_t>(d), n);
      const OrthonormalSystem s = real_trig_system(build_box(d, box));
      const SpectralCertificate c = certify_l2(s, grid_P(box));
      EXPECT_LE(c.eps, 1e-10) << "d=" << d << " n=" << n;
      EXPECT_LE(c.frobenius, 1e-10);
    }
}

TEST(Spectral, SinglePointIsRankOne) {
  const OrthonormalSystem s = cross(3);
  const auto [ps, c] = random_l2_pointset(s, 1, 5);
  const double n = s.size();
  EXPECT_NEAR(c.lambda_max, n, 1e-10);
  EXPECT_NEAR(c.lambda_min, 0.0, 1e-10);
  EXPECT_NEAR(c.eps, n - 1, 1e-10);
  EXPECT_NEAR(c.frobenius, std::sqrt(n * n - n), 1e-10);
}

TEST(Spectral, ErrorFunctionalIsQuadraticForm) {
  const OrthonormalSystem s = cross(3);
  const auto [ps, c] = random_l2_pointset(s, 40, 11);
  Rng rng(2);
  const Eigen::MatrixXd dm = c.matrix - Eigen::MatrixXd::Identity(s.size(), s.size());
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::VectorXd b = gaussian_vector(s.size(), rng);
    const double direct = l2_discretization_error(s, ps, b);
    EXPECT_NEAR(direct, b.dot(dm * b), 1e-8 * std::max(1.0, b.squaredNorm()));
    const double sq = b.squaredNorm();
    EXPECT_GE(direct + sq, (1 - c.eps) * sq - 1e-9);
    EXPECT_LE(direct + sq, (1 + c.eps) * sq + 1e-9);
  }
}

TEST(Spectral, RankOneAlgebra) {
  const OrthonormalSystem s = real_trig_system(build_hyperbolic_cross(2, 2));
  Rng rng(4);
  const PointMatrix pts = uniform_torus_points(50, 2, rng);
  for (Eigen::Index j = 0; j < pts.rows(); ++j) {
    const Eigen::MatrixXd g = gram_matrix_at(s, row_span(pts, j));
    const double w = s.christoffel(row_span(pts, j));
    EXPECT_LE((g * g - w * g).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_NEAR(extremal_eigenvalues(g).max, w, 1e-8);
  }
}

TEST(Spectral, SecondMomentOfCentredGram) {
  const OrthonormalSystem s = cross(3);
  const auto& quad = s.quadrature();
  const Eigen::Index n = s.size();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < quad.size(); ++j) {
    const Eigen::MatrixXd t = gram_matrix_at(s, row_span(quad.nodes(), j)) - id;
    avg += quad.weights()(j) * t * t;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(avg);
  EXPECT_LE((es.eigenvalues().array() - (n - 1.0)).abs().maxCoeff(), 1e-6);
}

TEST(Spectral, PowerIterationMatchesDense) {
  Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::MatrixXd b(30, 12);
    for (Eigen::Index j = 0; j < b.cols(); ++j) b.col(j) = gaussian_vector(30, rng);
    const Eigen::MatrixXd m = b.transpose() * b / 30.0;
    const auto dense = extremal_eigenvalues(m, EigenMethod::Dense);
    const auto power = extremal_eigenvalues(m, EigenMethod::Power);
    EXPECT_NEAR(dense.max, power.max, 1e-6);
    EXPECT_NEAR(dense.min, power.min, 1e-6);
  }
  EXPECT_THROW(extremal_eigenvalues(Eigen::MatrixXd(2, 3)), std::invalid_argument);
}

TEST(RandomSampling, EpsShrinksWithMoreSamples) {
  const OrthonormalSystem s = cross(2);
  const Eigen::Index m = 8 * s.size();
  std::vector<double> small, large;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    small.push_back(random_l2_pointset(s, m, seed).second.eps);
    large.push_back(random_l2_pointset(s, 4 * m, seed).second.eps);
  }
  EXPECT_GE(median(small) / median(large), 1.6);
}

TEST(RandomSampling, RetriesKeepBestAndAreDeterministic) {
  const OrthonormalSystem s = cross(2);
  const auto one = random_l2_pointset(s, 30, 3, 1);
  const auto many = random_l2_pointset(s, 30, 3, 8);
  EXPECT_LE(many.second.eps, one.second.eps);
  const auto again = random_l2_pointset(s, 30, 3, 8);
  EXPECT_EQ(many.first.points(), again.first.points());
  EXPECT_THROW(random_l2_pointset(s, 0, 1), std::invalid_argument);
  for (Eigen::Index i = 0; i < many.first.size(); ++i) EXPECT_TRUE(many.first.on_torus());
}

TEST(Concentration, ThresholdAndScaling) {
  const double c = kDefaultConcentrationC;
  const double n = 31, t = 1.5, eta = 0.5;
  const double critical = c * n * t * t * std::log(n) / (eta * eta);
  EXPECT_LT(concentration_budget(n, t, eta, critical * 1.001).bound, 1.0);
  EXPECT_GT(concentration_budget(n, t, eta, critical * 0.999).bound, 1.0);
  double prev = concentration_budget(n, t, eta, 0).bound;
  for (double m = 100; m < 1e6; m *= 2) {
    const double b = concentration_budget(n, t, eta, m).bound;
    EXPECT_LT(b, prev);
    prev = b;
  }
  EXPECT_LT(prev, 1e-12);
  EXPECT_LT(concentration_budget(10, t, eta, 500).bound, concentration_budget(20, t, eta, 500).bound);

  const long long m1 = min_m_for(n, 1.0, 0.1, 0.5);
  const long long m2 = min_m_for(n, 2.0, 0.1, 0.5);
  EXPECT_NEAR(static_cast<double>(m2) / m1, 4.0, 1e-3);
  EXPECT_LT(concentration_budget(n, 1.0, 0.1, m1).bound, 0.5);
  EXPECT_GE(concentration_budget(n, 1.0, 0.1, m1 - 1).bound, 0.5);

  EXPECT_THROW(concentration_budget(n, t, 0.0, 10), std::invalid_argument);
  EXPECT_THROW(concentration_budget(n, t, -1.0, 10), std::invalid_argument);
  EXPECT_THROW(min_m_for(n, 0.5, 0.5, 0.5), std::invalid_argument);
}

TEST(Concentration, ChernoffTails) {
  EXPECT_NEAR(chernoff_lower_tail(5, 0.0, 10, 1), 5.0, 1e-12);
  EXPECT_LT(chernoff_lower_tail(5, 0.5, 200, 7), chernoff_lower_tail(5, 0.5, 100, 7));
  EXPECT_LT(chernoff_upper_tail(5, 0.5, 200, 7), chernoff_upper_tail(5, 0.5, 100, 7));
  EXPECT_LT(matrix_bernstein_tail(5, 2.0, 1.0, 1.0), matrix_bernstein_tail(5, 1.0, 1.0, 1.0));
}

TEST(FrobeniusRga, SingleStepResidual) {
  const OrthonormalSystem s = cross(2);
  const auto r = frobenius_rga_identity(s, 1);
  const double n = s.size();
  EXPECT_NEAR(r.residuals.front(), std::sqrt(n * n - n), 1e-10);
  EXPECT_LE(r.residuals.front(), 2 * n);
}

TEST(FrobeniusRga, GuaranteeForAllM) {
  for (int level : {2, 3}) {
    const OrthonormalSystem s = cross(level);
    const double n = s.size();
    const auto r = frobenius_rga_identity(s, 256);
    for (std::size_t k = 0; k < r.residuals.size(); ++k)
      EXPECT_LE(r.residuals[k], 2 * n / std::sqrt(k + 1.0)) << "m=" << k + 1;
    EXPECT_NEAR(r.residuals.back(), r.certificate.frobenius, 1e-9);
    EXPECT_LE(r.certificate.eps, r.certificate.frobenius + 1e-12);
  }
}

TEST(FrobeniusRga, ConstantSystemAndErrors) {
  const OrthonormalSystem s = real_trig_system(build_box(1, std::vector<int>{0}));
  const auto r = frobenius_rga_identity(s, 1);
  EXPECT_NEAR(r.residuals.front(), 0.0, 1e-14);
  EXPECT_NEAR(r.certificate.matrix(0, 0), 1.0, 1e-14);
  EXPECT_THROW(frobenius_rga_identity(cross(2).with_constants({}), 4), std::invalid_argument);
  EXPECT_THROW(frobenius_rga_identity(cross(2), 0), std::invalid_argument);
}

TEST(Bss, RatioBoundFormula) {
  EXPECT_NEAR(bss_ratio_bound(4.0), 9.0, 1e-12);
  EXPECT_THROW(bss_ratio_bound(1.0), std::invalid_argument);
}

TEST(Bss, SparsifiesGrids) {
  for (int level : {2, 3}) {
    const OrthonormalSystem base = cross(level);
    const int n = base.size();
    for (double d : {1.5, 2.0, 4.0, 6.5})
      for (int factor : {8, 11}) {
        const OrthonormalSystem s = on_grid(base, factor * n);
        const BssResult r = bss_weighted_sparsify(s, d);
        EXPECT_LE(r.points.support_size(), static_cast<Eigen::Index>(std::ceil(d * n)));
        EXPECT_NEAR(r.certificate.lambda_min, 1.0, 1e-9);
        EXPECT_LE(r.certificate.ratio(), r.ratio_bound * (1 + 1e-9)) << "N=" << n << " d=" << d;
        for (const BssStep& st : r.steps) {
          EXPECT_LE(st.lower_potential, r.eps_lower * (1 + 1e-9));
          EXPECT_LE(st.upper_potential, r.eps_upper * (1 + 1e-9));
          EXPECT_LT(st.lower, st.lambda_min);
          EXPECT_LT(st.lambda_max, st.upper);
        }
      }
  }
}

TEST(Bss, ExactGridIsKept) {
  const OrthonormalSystem base = cross(2);
  const OrthonormalSystem s = on_grid(base, base.size());
  const BssResult r = bss_weighted_sparsify(s, 4.0);
  EXPECT_EQ(r.points.support_size(), base.size());
  EXPECT_NEAR(r.certificate.ratio(), 1.0, 1e-10);
  for (Eigen::Index i = 0; i < r.points.size(); ++i) EXPECT_NEAR((*r.points.weights())(i), 1.0 / base.size(), 1e-12);
}

TEST(Bss, Errors) {
  const OrthonormalSystem base = cross(2);
  EXPECT_THROW(bss_weighted_sparsify(base, 4.0), std::invalid_argument);
  EXPECT_THROW(bss_weighted_sparsify(on_grid(base, 56), 1.0), std::invalid_argument);
  EXPECT_THROW(bss_weighted_sparsify(on_grid(base, 5), 2.0), std::invalid_argument);
}
