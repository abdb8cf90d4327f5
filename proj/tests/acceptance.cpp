// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit code 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mdisc/mdisc.hpp"

using namespace mdisc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

OrthonormalSystem cross(int n, int dim = 1) { return real_trig_system(build_hyperbolic_cross(n, dim)); }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

Vec<cplx> convex_combination(const ComplexDictionary& d, int terms, Rng& rng) {
  std::uniform_int_distribution<Eigen::Index> pick(0, d.size() - 1);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> w(static_cast<std::size_t>(terms));
  double total = 0.0;
  for (auto& v : w) total += (v = unif(rng) + 1e-3);
  Vec<cplx> f = Vec<cplx>::Zero(d.ambient_dim());
  for (double v : w) f += (v / total) * std::polar(1.0, kTwoPi * unif(rng)) * d.atom(pick(rng));
  return f;
}

// 1. Grid exactness on Pi(N).
Outcome grid_exactness() {
  double eps_max = 0.0, l1_max = 0.0, l2_max = 0.0;
  Rng rng(1);
  for (int d = 1; d <= 2; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const std::vector<int> box(static_cast<std::size_t>(d), n);
      const FrequencySet q = build_box(d, box);
      const PointSet grid = grid_P(box);
      eps_max = std::max(eps_max, certify_l2(real_trig_system(q), grid).eps);
      // all 100 polynomials evaluated at once on the grid and on the truth quadrature
      const Quadrature truth = quadrature_for(q, 16);
      Eigen::MatrixXcd coeffs(static_cast<Eigen::Index>(q.size()), 100);
      for (int i = 0; i < 100; ++i) coeffs.col(i) = random_trig_polynomial(q, rng).coeffs();
      const Eigen::MatrixXd on_grid = (exponential_matrix(q, grid.points()) * coeffs).cwiseAbs();
      const Eigen::MatrixXd on_truth = (exponential_matrix(q, truth.nodes()) * coeffs).cwiseAbs();
      for (int i = 0; i < 100; ++i) {
        l1_max = std::max(l1_max, std::abs(discrepancy(on_grid.col(i), grid, on_truth.col(i), truth, 1.0)));
        l2_max = std::max(l2_max, std::abs(discrepancy(on_grid.col(i), grid, on_truth.col(i), truth, 2.0)));
      }
    }
  }
  return {eps_max <= 1e-10 && l1_max <= 1e-10,
          "eps_max=" + fmt("%.2e", eps_max) + " l1_disc_max=" + fmt("%.3e", l1_max) +
              " (l2_disc_max=" + fmt("%.2e", l2_max) + ")"};
}

// 2. OGA on D^2(Q_2), d = 1.
Outcome oga_guarantee() {
  const FrequencySet q = build_hyperbolic_cross(2, 1);
  const std::vector<int> box{4};
  const ComplexDictionary d = build_shifted_kernel_dict(q, box);
  Rng rng(2);
  int violations = 0, checks = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Vec<cplx> f = convex_combination(d, 1 + i % 9, rng);
    for (double t : {1.0, 0.5}) {
      const auto run = oga(f, d, t, 32);
      for (int m = 1; m <= 32; ++m) {
        const double bound = 1.0 / std::sqrt(1.0 + m * t * t);
        const double r = run.residual_norms[static_cast<std::size_t>(m - 1)];
        worst = std::max(worst, r / bound);
        ++checks;
        if (r > bound + 1e-12) ++violations;
      }
    }
  }
  return {violations == 0 && (q.size() == 7),
          std::to_string(checks) + " checks, violations=" + std::to_string(violations) +
              " max residual/bound=" + fmt("%.3f", worst)};
}

// 3. RGA over A_1(D^2(Q)) and kernel RGA over D^0.
Outcome rga_guarantees() {
  const FrequencySet q = build_hyperbolic_cross(3, 1);
  const std::vector<int> box{8};
  const ComplexDictionary d = build_shifted_kernel_dict(q, box);
  Rng rng(3);
  int v1 = 0, v2 = 0;
  double w1 = 0.0, w2 = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto run = rga(convex_combination(d, 2 + i % 7, rng), d, 64);
    for (int m = 1; m <= 64; ++m) {
      const double r = run.residual_norms[static_cast<std::size_t>(m - 1)];
      const double bound = 2.0 / std::sqrt(m);
      w1 = std::max(w1, r / bound);
      if (r > bound + 1e-12) ++v1;
    }
  }
  const OrthonormalSystem s = cross(3);
  const ContinuousKernelDictionary d0(s);
  const double k2n = *s.constants().K2 * s.size();
  const auto fs = system_stress_set(s, 1.0, 50, rng);
  for (const auto& f : fs) {
    const double mass = s.norm_lp(f, 1.0);
    const auto run = kernel_rga(s, d0, f, 64);
    for (int m = 1; m <= 64; ++m) {
      const double r = run.residual_norms[static_cast<std::size_t>(m - 1)];
      const double bound = 2.0 * std::sqrt(k2n / m) * mass;
      w2 = std::max(w2, r / bound);
      if (r > bound * (1 + 1e-10)) ++v2;
    }
  }
  return {v1 == 0 && v2 == 0, "2/sqrt(m): violations=" + std::to_string(v1) + " max ratio=" + fmt("%.3f", w1) +
                                  "; 2(K2N/m)^1/2: violations=" + std::to_string(v2) +
                                  " max ratio=" + fmt("%.3f", w2)};
}

// 4. Frobenius RGA for the identity, every prefix m in [1, 256].
Outcome frobenius_identity() {
  const OrthonormalSystem s = cross(2);
  const int n = s.size();
  const auto res = frobenius_rga_identity(s, 256);
  int violations = 0, spectral_violations = 0;
  double worst = 0.0;
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (int m = 1; m <= 256; ++m) {
    sum += gram_matrix_at(s, row_span(res.points.points(), m - 1));
    const Eigen::MatrixXd avg = sum / m;
    const double frob = (avg - Eigen::MatrixXd::Identity(n, n)).norm();
    const double bound = 2.0 * n / std::sqrt(m);
    worst = std::max(worst, frob / bound);
    if (frob > bound + 1e-10) ++violations;
    if (std::abs(res.residuals[static_cast<std::size_t>(m - 1)] - frob) > 1e-8) ++violations;
    if (certify_l2(avg).eps > frob + 1e-10) ++spectral_violations;
  }
  return {violations == 0 && spectral_violations == 0 && n == 7,
          "violations=" + std::to_string(violations) + " spectral>frobenius=" + std::to_string(spectral_violations) +
              " max residual/bound=" + fmt("%.3f", worst)};
}

// 5. eps(m)/eps(4m) for random sampling.
Outcome random_l2_scaling() {
  bool ok = true;
  std::string detail;
  for (int n : {2, 3, 4}) {
    const OrthonormalSystem s = cross(n);
    const Eigen::Index m = 8 * s.size();
    std::vector<double> ratios;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const double e1 = random_l2_pointset(s, m, seed).second.eps;
      const double e4 = random_l2_pointset(s, 4 * m, 1000 + seed).second.eps;
      ratios.push_back(e1 / e4);
    }
    const double med = median(ratios);
    ok = ok && med >= 1.6;
    detail += "N=" + std::to_string(s.size()) + ":" + fmt("%.2f", med) + " ";
  }
  return {ok, "median eps(8N)/eps(32N) " + detail};
}

// 6. Spectrum of G(x) and the second moment of G - I.
Outcome rank_one_spectra() {
  Rng rng(6);
  double eig_err = 0.0, moment_err = 0.0;
  for (const OrthonormalSystem& s : {cross(2), cross(3), cross(2, 2)}) {
    const PointMatrix pts = uniform_torus_points(1000, s.dim(), rng);
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
      const auto x = row_span(pts, i);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_matrix_at(s, x));
      Eigen::VectorXd want = Eigen::VectorXd::Zero(s.size());
      want(s.size() - 1) = s.christoffel(x);
      eig_err = std::max(eig_err, (es.eigenvalues() - want).cwiseAbs().maxCoeff());
    }
    const int n = s.size();
    const auto& quad = s.quadrature();
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < quad.size(); ++j) {
      const Eigen::MatrixXd a = gram_matrix_at(s, row_span(quad.nodes(), j)) - Eigen::MatrixXd::Identity(n, n);
      acc += quad.weights()(j) * a * a;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(acc);
    moment_err = std::max(moment_err, (es.eigenvalues().array() - (n - 1)).abs().maxCoeff());
  }
  return {eig_err <= 1e-8 && moment_err <= 1e-6,
          "eigenvalue err=" + fmt("%.2e", eig_err) + " second moment err=" + fmt("%.2e", moment_err)};
}

// 7. BSS on an 8N-point uniform grid.
Outcome bss_sparsifier() {
  bool ok = true;
  std::string detail;
  const double bound = bss_ratio_bound(4.0);
  for (int n : {2, 3}) {
    const OrthonormalSystem s = cross(n);
    const int N = s.size();
    const OrthonormalSystem omega = s.restricted_to(tensor_grid(std::vector<int>{8 * N}), "omega");
    const BssResult r = bss_weighted_sparsify(omega, 4.0);
    const double ratio = r.certificate.ratio();
    ok = ok && static_cast<int>(r.support.size()) <= 4 * N && ratio <= 9.0 && ratio <= bound + 1e-9;
    detail += "N=" + std::to_string(N) + ": support=" + std::to_string(r.support.size()) + " ratio=" +
              fmt("%.3f", ratio) + "; ";
  }
  return {ok, detail + "bound=" + fmt("%.3f", bound)};
}

// 8. Chaining budget scaling.
Outcome chaining_scaling() {
  std::vector<double> ns, ratios, halving;
  bool finite = true;
  for (int n = 2; n <= 6; ++n) {
    const FrequencySet q = build_hyperbolic_cross(n, 1);
    const double m1 = static_cast<double>(min_m_chaining(chaining_params_trig(q, n, 0.125, 1.0, 8.0, false)));
    const double m2 = static_cast<double>(min_m_chaining(chaining_params_trig(q, n, 0.0625, 1.0, 8.0, false)));
    finite = finite && std::isfinite(m1) && m1 > 0;
    ns.push_back(n);
    ratios.push_back(m1 / q.size());
    halving.push_back(m2 / m1);
  }
  const double slope = loglog_slope(ns, ratios);
  bool ok = finite && std::abs(slope - 3.5) <= 0.5;
  std::string h;
  for (double v : halving) {
    ok = ok && std::abs(v / 4.0 - 1.0) <= 0.25;
    h += fmt("%.2f", v) + " ";
  }
  return {ok, "slope=" + fmt("%.3f", slope) + " eta-halving " + h};
}

// 9. The certifier catches a single point and is exact on the reference grid.
Outcome l1_falsification() {
  const OrthonormalSystem s = cross(2);
  double worst_single = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    worst_single = std::max(worst_single, certify_l1(random_l1_pointset(1, 1, seed), s).r_min);
  const PointSet grid(l1_reference_quadrature(s).nodes());
  const L1Certificate c = certify_l1(grid, s);
  const double dev = std::max(std::abs(c.r_min - 1.0), std::abs(c.r_max - 1.0));
  return {worst_single < 0.05 && dev <= 1e-6,
          "m=1 max r_min=" + fmt("%.2e", worst_single) + " exact grid |r-1|=" + fmt("%.2e", dev)};
}

// 10. Random point sets of size 40 |Q_n| n^2.
Outcome l1_end_to_end() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 3; ++n) {
    const OrthonormalSystem s = cross(n);
    const Eigen::Index m = 40 * s.size() * n * n;
    int passed = 0;
    double lo = 1e300, hi = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const L1Certificate c = certify_l1(random_l1_pointset(s, m, seed), s);
      passed += c.pass;
      lo = std::min(lo, c.r_min);
      hi = std::max(hi, c.r_max);
    }
    ok = ok && passed >= 9;
    detail += "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + std::to_string(passed) + "/10 r in [" +
              fmt("%.3f", lo) + "," + fmt("%.3f", hi) + "]; ";
  }
  return {ok, detail};
}

// 11. Nikol'skii inequality |f|_inf <= |Q| |f|_1.
Outcome nikolskii() {
  int violations = 0;
  std::string detail;
  for (int n : {2, 3, 4}) {
    const FrequencySet q = build_hyperbolic_cross(n, 1);
    const NikolskiiReport r = nikolskii_check(q, 1000, static_cast<std::uint64_t>(n));
    violations += r.violations;
    detail += "N=" + std::to_string(q.size()) + " max ratio=" + fmt("%.2f", r.max_ratio) + "; ";
  }
  return {violations == 0, detail + "violations=" + std::to_string(violations)};
}

// 12. Byte-identical outputs for identical seeds.
std::string snapshot() {
  std::ostringstream os;
  const OrthonormalSystem s = cross(2);
  const auto [ps, cert] = random_l2_pointset(s, 60, 7);
  os << to_json(ps).dump() << cell(cert.eps) << cell(cert.frobenius) << '\n';
  const auto fr = frobenius_rga_identity(s, 40);
  os << to_json(fr.points).dump() << cell(fr.certificate.eps) << '\n';
  const auto b = bss_weighted_sparsify(s.restricted_to(tensor_grid(std::vector<int>{56}), "omega"), 4.0);
  os << to_json(b.points).dump() << cell(b.certificate.ratio()) << '\n';
  const PointSet z = random_l1_pointset(s, 200, 11);
  const L1Certificate c = certify_l1(z, s, {}, {.restarts = 20, .iterations = 100, .seed = 3});
  os << to_json(z).dump() << cell(c.r_min) << cell(c.r_max) << cell(c.pass) << '\n';
  return os.str();
}

Outcome determinism() {
  const std::string a = snapshot();
  const std::string b = snapshot();
  return {a == b && !a.empty(), std::to_string(a.size()) + " bytes, identical=" + (a == b ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "grid exactness", 5, grid_exactness},
      {2, "OGA guarantee", 10, oga_guarantee},
      {3, "RGA guarantees", 10, rga_guarantees},
      {4, "Frobenius identity sparsification", 30, frobenius_identity},
      {5, "random L2 scaling", 120, random_l2_scaling},
      {6, "rank-one spectra", 60, rank_one_spectra},
      {7, "BSS", 120, bss_sparsifier},
      {8, "chaining budget", 10, chaining_scaling},
      {9, "L1 falsification soundness", 60, l1_falsification},
      {10, "L1 end-to-end", 300, l1_end_to_end},
      {11, "Nikol'skii", 30, nikolskii},
      {12, "determinism", 1e9, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] %2d %s: %s (%.2fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), secs,
                in_time ? "" : ", over time limit");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
