#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mdisc/core/frequency_set.hpp"
#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/dictionaries/builders.hpp"
#include "mdisc/dictionaries/continuous.hpp"
#include "mdisc/dictionaries/delta_net.hpp"

using namespace mdisc;

TEST(ShiftedKernelDict, GridCardinalityAndNorms) {
  const std::vector<int> box{2};
  for (const FrequencySet& q : {build_hyperbolic_cross(1, 1), FrequencySet(1, {{-2}, {1}}), build_box(1, box)}) {
    const ComplexDictionary d = build_shifted_kernel_dict(q, box);
    EXPECT_EQ(d.size(), 5);
    EXPECT_EQ(d.kind(), DictionaryKind::ShiftedKernelGrid);
    EXPECT_LT((d.atom_norms().array() - 1.0).abs().maxCoeff(), 1e-14);
  }
  const std::vector<int> box2{4, 4};
  const FrequencySet q2 = build_hyperbolic_cross(2, 2);
  EXPECT_EQ(build_shifted_kernel_dict(q2, box2).size(), (2 * 4 + 1) * (2 * 4 + 1));
}

TEST(ShiftedKernelDict, AtomAtZeroShiftPeaksAtSqrtQ) {
  const FrequencySet q = build_hyperbolic_cross(3, 1);
  const std::vector<int> box{8};
  const ComplexDictionary d = build_shifted_kernel_dict(q, box);
  ASSERT_EQ(d.parameter(0), std::vector<double>{0.0});
  // value at x = 0 is the sum of the coefficients
  EXPECT_NEAR(std::abs(d.atom(0).sum()), std::sqrt(double(q.size())), 1e-12);
}

TEST(ShiftedKernelDict, RejectsGridTooCoarse) {
  const std::vector<int> box{1};
  EXPECT_THROW(build_shifted_kernel_dict(build_hyperbolic_cross(2, 1), box), std::invalid_argument);
}

TEST(UnionDict, CardinalityAndFlatIndex) {
  const FrequencySet q = build_hyperbolic_cross(2, 1);
  const std::vector<int> box{4};
  const ComplexDictionary u = build_union_dict(q, box);
  EXPECT_EQ(u.size(), 9 + 7);
  EXPECT_LE(u.size(), 9 + static_cast<Eigen::Index>(q.size()));
  EXPECT_EQ(u.kind(), DictionaryKind::Union);
  // residual equal to an exponential picks the exponential (index after the grid atoms)
  Vec<cplx> r = Vec<cplx>::Zero(7);
  r(2) = 1.0;
  EXPECT_EQ(u.select(r).index, 9 + 2);
}

TEST(Select, ResidualEqualToAtomReturnsIt) {
  const FrequencySet q = build_hyperbolic_cross(3, 1);
  const std::vector<int> box{8};
  const ComplexDictionary d = build_shifted_kernel_dict(q, box);
  for (Eigen::Index j : {0, 5, 16}) {
    const Selection<cplx> s = d.select(Vec<cplx>(d.atom(j)));
    EXPECT_EQ(s.index, j);
    EXPECT_NEAR(s.score, 1.0, 1e-12);
  }
}

TEST(Select, WeakSelectionMeetsThreshold) {
  const FrequencySet q = build_hyperbolic_cross(4, 1);
  const std::vector<int> box{16};
  const ComplexDictionary d = build_shifted_kernel_dict(q, box);
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec<cplx> r = complex_gaussian_vector(d.ambient_dim(), rng);
    double exact = 0.0;
    for (Eigen::Index j = 0; j < d.size(); ++j) exact = std::max(exact, std::abs(d.atom(j).dot(r)));
    const Selection<cplx> s = d.select(r, 0.5);
    EXPECT_GE(std::abs(d.atom(s.index).dot(r)), 0.5 * exact - 1e-12);
    EXPECT_NEAR(std::abs(s.atom.dot(r) - s.score), 0.0, 1e-10);  // phase applied
    EXPECT_NEAR(d.select(r, 1.0).score, exact, 1e-12);
  }
}

TEST(Select, TiesBrokenByLowestIndex) {
  Mat<double> atoms = Mat<double>::Identity(3, 3);
  const RealDictionary d(DictionaryKind::ScaledBasis, atoms, Symmetry::Sign);
  EXPECT_EQ(d.select(Eigen::Vector3d(1.0, -1.0, 1.0)).index, 0);
  EXPECT_EQ(d.select(Eigen::Vector3d(0.5, -1.0, 1.0)).index, 1);
  EXPECT_EQ(d.select(Eigen::Vector3d(0.5, -1.0, 1.0)).multiplier, -1.0);
}

TEST(Select, EmptyDictionaryThrows) {
  const RealDictionary d(DictionaryKind::ScaledBasis, Mat<double>(3, 0), Symmetry::Sign);
  EXPECT_THROW(d.select(Eigen::Vector3d::Ones()), std::invalid_argument);
}

TEST(DeltaNet, CoverageAndCardinality) {
  const DeltaNet net = build_delta_net(1, std::numbers::pi);
  EXPECT_GE(net.size(), 2);
  EXPECT_LE(net.covering_radius(), std::numbers::pi);
  for (int d = 1; d <= 3; ++d)
    for (double delta : {0.05, 0.3, 1.0, 2.5}) {
      if (d == 3 && delta < 0.1) continue;
      const DeltaNet n = build_delta_net(d, delta);
      EXPECT_LE(double(n.size()), std::pow(kTwoPi / delta + 1.0, d));
      EXPECT_LE(n.spacing(), delta + 1e-15);
    }
  // covering: random points are within delta (sup metric on the torus)
  const DeltaNet n2 = build_delta_net(2, 0.4);
  Rng rng(8);
  const PointMatrix pts = uniform_torus_points(500, 2, rng);
  for (Eigen::Index i = 0; i < pts.rows(); ++i) {
    double best = 1e9;
    for (Eigen::Index j = 0; j < n2.size(); ++j) {
      double dist = 0.0;
      for (int c = 0; c < 2; ++c) {
        double a = std::abs(pts(i, c) - n2.nodes(j, c));
        dist = std::max(dist, std::min(a, kTwoPi - a));
      }
      best = std::min(best, dist);
    }
    EXPECT_LE(best, 0.4);
  }
  EXPECT_THROW(build_delta_net(1, 0.0), std::invalid_argument);
}

TEST(DeltaNet, ChooseDelta0) {
  // Q = {+-1, ..., +-8} gives a 16-function real system
  std::vector<Frequency> f;
  for (int k = 1; k <= 8; ++k) {
    f.push_back({k});
    f.push_back({-k});
  }
  SystemConstants c;
  c.K1 = 1.0;
  c.alpha = 1.0;
  c.beta = 0.0;
  const OrthonormalSystem s16 = real_trig_system(FrequencySet(1, f)).with_constants(c);
  ASSERT_EQ(s16.size(), 16);
  EXPECT_DOUBLE_EQ(choose_delta0(s16), 0.25);
  c.alpha = 0.5;
  EXPECT_DOUBLE_EQ(choose_delta0(s16.with_constants(c)), 0.0625);
  c.beta = 0.5;
  c.alpha = 1.0;
  c.K1 = 2.0;
  EXPECT_DOUBLE_EQ(choose_delta0(s16.with_constants(c)), 1.0 / 32.0);
  EXPECT_THROW(choose_delta0(s16.with_constants(SystemConstants{})), std::invalid_argument);
}

TEST(KernelDict, AtomsHaveNormAtMostOne) {
  const OrthonormalSystem s = real_trig_system(build_hyperbolic_cross(3, 2));
  const RealDictionary d = build_kernel_net_dict(s, build_delta_net(2, 0.5));
  EXPECT_LE(d.atom_norms().maxCoeff(), 1.0 + 1e-12);
  const RealDictionary b = build_scaled_basis_dict(s);
  EXPECT_EQ(b.size(), s.size());
  EXPECT_LE(b.atom_norms().maxCoeff(), 1.0 + 1e-12);
  // sup norm of g_i is <= 1 as well (condition B, K2 = 2)
  for (Eigen::Index i = 0; i < b.size(); ++i) EXPECT_LE(s.norm_inf(b.atom(i)), 1.0 + 1e-9);
}

TEST(KernelDict, DisplacementBound) {
  const OrthonormalSystem s = real_trig_system(build_hyperbolic_cross(3, 2));
  const ContinuousKernelDictionary d0(s);
  const auto& c = s.constants();
  const double n = s.size();
  Rng rng(12);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  for (int i = 0; i < 200; ++i) {
    const PointMatrix y = uniform_torus_points(1, 2, rng);
    std::vector<double> a{y(0, 0), y(0, 1)};
    std::vector<double> b{a[0] + jitter(rng), a[1] + jitter(rng)};
    const double dist = std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
    const double lhs = (d0.atom_at(a) - d0.atom_at(b)).squaredNorm();
    const double rhs = *c.K1 * *c.K1 * std::pow(n, 1.0 + 2.0 * *c.beta) * std::pow(dist, 2.0 * *c.alpha) / (*c.K2 * n);
    EXPECT_LE(lhs, rhs + 1e-14);
  }
}

TEST(KernelDict, ContinuousSearchMaximisesAbsValue) {
  const OrthonormalSystem s = real_trig_system(build_hyperbolic_cross(3, 1));
  const ContinuousKernelDictionary d0(s);
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    const Eigen::VectorXd h = gaussian_vector(s.size(), rng);
    const Selection<double> sel = d0.select(h);
    const double found = std::abs(s.value(h, sel.parameter));
    EXPECT_NEAR(found, s.norm_inf(h), 1e-7);
    EXPECT_NEAR(sel.score, found * d0.scale(), 1e-10);
  }
}

TEST(ShiftedKernelContinuous, SearchMaximisesAbsValue) {
  const FrequencySet q = build_hyperbolic_cross(3, 1);
  const ContinuousShiftedKernelDictionary d(q);
  Rng rng(22);
  for (int i = 0; i < 20; ++i) {
    const Vec<cplx> h = complex_gaussian_vector(static_cast<Eigen::Index>(q.size()), rng);
    const Selection<cplx> sel = d.select(h);
    const TrigPolynomial p(q, h);
    EXPECT_NEAR(std::abs(p(sel.parameter)), norm_inf(p, quadrature_for(q, 8)), 1e-7);
    EXPECT_NEAR(sel.atom.norm(), 1.0, 1e-12);
  }
}

TEST(MatrixDict, SingleConstantFunction) {
  SystemConstants c;
  c.t = 2.0;
  const OrthonormalSystem s = real_trig_system(FrequencySet(1, {{0}})).with_constants(c);
  const RealDictionary d = build_matrix_dict(s, build_delta_net(1, 1.0));
  for (Eigen::Index j = 0; j < d.size(); ++j) EXPECT_NEAR(d.atom(j)(0), 0.25, 1e-15);
}

TEST(MatrixDict, ConditionDAtomsHaveUnitFrobeniusNormAndRankOne) {
  const OrthonormalSystem s = real_trig_system(build_hyperbolic_cross(2, 1));
  Rng rng(9);
  const PointMatrix pts = uniform_torus_points(50, 1, rng);
  const RealDictionary d = build_matrix_dict(s, pts);
  const Eigen::Index n = s.size();
  for (Eigen::Index j = 0; j < d.size(); ++j) {
    EXPECT_NEAR(d.atom(j).norm(), 1.0, 1e-12);
    const Eigen::MatrixXd g = Eigen::Map<const Eigen::MatrixXd>(d.atom(j).data(), n, n);
    EXPECT_LT((g - g.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
    EXPECT_EQ((es.eigenvalues().array().abs() > 1e-10).count(), 1);
  }
  EXPECT_THROW(build_matrix_dict(s.with_constants(SystemConstants{}), pts), std::invalid_argument);
}
