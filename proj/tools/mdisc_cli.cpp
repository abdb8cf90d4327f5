#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mdisc/mdisc.hpp"
#include "mdisc/io/experiment_config.hpp"
#include "mdisc/version.hpp"

using namespace mdisc;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct SpaceArgs {
  std::string kind = "hyperbolic";
  int dim = 1;
  int n = 2;
  std::string box;
  std::string freqset_path;
};

void add_space_options(CLI::App* cmd, SpaceArgs& s) {
  cmd->add_option("--space", s.kind, "hyperbolic or box")->check(CLI::IsMember({"hyperbolic", "box"}));
  cmd->add_option("--dim", s.dim, "dimension d")->check(CLI::Range(1, 4));
  cmd->add_option("--n", s.n, "hyperbolic cross level")->check(CLI::Range(0, 12));
  cmd->add_option("--N", s.box, "box half-widths, comma separated (implies --space box)");
  cmd->add_option("--freqset", s.freqset_path, "frequency set JSON (overrides --space)");
}

FrequencySet build_space(const SpaceArgs& s) {
  if (!s.freqset_path.empty()) {
    std::ifstream in(s.freqset_path);
    if (!in) throw ConfigError("cannot open frequency set '" + s.freqset_path + "'");
    json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw ConfigError(std::string("bad frequency set JSON: ") + e.what());
    }
    return frequency_set_from_json(j);
  }
  if (!s.box.empty() || s.kind == "box") {
    std::vector<int> box;
    for (long long v : parse_int_list(s.box.empty() ? std::to_string(s.n) : s.box, "--N")) box.push_back(static_cast<int>(v));
    if (s.box.empty()) box.assign(static_cast<std::size_t>(s.dim), s.n);
    return build_box(static_cast<int>(box.size()), box);
  }
  return build_hyperbolic_cross(s.n, s.dim);
}

std::string space_label(const SpaceArgs& s, const FrequencySet& q) {
  if (!s.freqset_path.empty()) return "file-d" + std::to_string(q.dim());
  if (!s.box.empty() || s.kind == "box") return "box-d" + std::to_string(q.dim());
  return "hyperbolic-d" + std::to_string(q.dim()) + "-n" + std::to_string(s.n);
}

std::vector<double> parse_pair(const std::string& s, const std::string& what) {
  const auto v = parse_double_list(s, what);
  if (v.size() != 2 || !(v[0] <= v[1])) throw ConfigError(what + " must be low,high");
  return v;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  return file;
}

// Uniform grid with L^d >= factor * N nodes and L >= 2 max|k| + 1 per axis.
PointMatrix bss_domain(const FrequencySet& q, int factor) {
  const double want = static_cast<double>(factor) * static_cast<double>(q.size());
  int l = 2 * q.max_abs() + 1;
  while (std::pow(l, q.dim()) < want) ++l;
  return tensor_grid(std::vector<int>(static_cast<std::size_t>(q.dim()), l));
}

// ---------------------------------------------------------------------------

int cmd_freqset(const std::string& kind, int dim, int n, const std::string& box, const std::string& s,
                const std::string& out) {
  FrequencySet q;
  if (kind == "hyperbolic") {
    q = build_hyperbolic_cross(n, dim);
  } else if (kind == "box") {
    if (box.empty()) throw ConfigError("--kind box needs --N");
    std::vector<int> b;
    for (long long v : parse_int_list(box, "--N")) b.push_back(static_cast<int>(v));
    q = build_box(static_cast<int>(b.size()), b);
  } else {
    if (s.empty()) throw ConfigError("--kind dyadic needs --s");
    std::vector<int> sv;
    for (long long v : parse_int_list(s, "--s")) sv.push_back(static_cast<int>(v));
    if (static_cast<int>(sv.size()) != dim && dim != 1) throw ConfigError("--s must have --dim entries");
    q = build_dyadic_block(sv);
  }
  std::ofstream file;
  open_out(out, file) << to_json(q).dump(1) << '\n';
  std::cerr << q.size() << " frequencies\n";
  return 0;
}

struct DiscretizeArgs {
  int q = 2;
  std::string method = "random";
  long long m = 0;
  std::uint64_t seed = 0;
  std::string target = "0.5,1.5";
  double eps = 0.5;
  double d = 4.0;
  int omega_factor = 8;
  int retries = 1;
  int restarts = 200;
  int iterations = 500;
  std::string points_out;
  std::string cert_out;
};

const std::vector<std::string> kCertificateColumns{"q", "method", "N", "m", "seed", "c_low", "c_high", "eps",
                                                   "frobenius_residual", "effort", "pass"};

int cmd_discretize(const SpaceArgs& sa, const DiscretizeArgs& a) {
  if (a.q == 1 && (a.method == "bss" || a.method == "frobenius-rga"))
    throw ConfigError("method " + a.method + " requires --q 2");
  if (a.method == "random" || a.method == "frobenius-rga")
    if (a.m < 1) throw ConfigError("method " + a.method + " needs --m >= 1");
  const auto tgt = parse_pair(a.target, "--target");
  const FrequencySet q = build_space(sa);
  if (!q.symmetric()) throw ConfigError("frequency set must be symmetric for the real trigonometric system");
  const OrthonormalSystem system = real_trig_system(q);
  const std::vector<int> box = q.max_abs_per_axis();

  PointSet points;
  std::vector<std::string> row{cell(a.q), a.method, cell(system.size()), "", cell(a.seed)};
  bool pass = false;
  if (a.q == 2) {
    SpectralCertificate cert;
    long long effort = 0;
    double low = 1.0 - a.eps, high = 1.0 + a.eps;
    if (a.method == "random") {
      auto [ps, c] = random_l2_pointset(system, a.m, a.seed, a.retries);
      points = std::move(ps);
      cert = std::move(c);
      effort = a.retries;
    } else if (a.method == "grid") {
      points = grid_P(box);
      cert = certify_l2(system, points);
    } else if (a.method == "frobenius-rga") {
      auto r = frobenius_rga_identity(system, static_cast<int>(a.m));
      points = std::move(r.points);
      cert = std::move(r.certificate);
      effort = a.m;
    } else {
      const OrthonormalSystem on_omega = system.restricted_to(bss_domain(q, a.omega_factor), system.name() + "_omega");
      auto r = bss_weighted_sparsify(on_omega, a.d);
      points = std::move(r.points);
      cert = std::move(r.certificate);
      effort = static_cast<long long>(r.steps.size());
      low = 1.0;
      high = r.ratio_bound;
    }
    pass = cert.lambda_min >= low - 1e-12 && cert.lambda_max <= high + 1e-12;
    row.insert(row.end(), {cell(cert.lambda_min), cell(cert.lambda_max), cell(cert.eps), cell(cert.frobenius),
                           cell(effort), cell(pass)});
  } else {
    if (a.method == "random") {
      points = random_l1_pointset(system.dim(), a.m, a.seed);
    } else {
      points = grid_P(box);
    }
    L1Effort effort;
    effort.restarts = a.restarts;
    effort.iterations = a.iterations;
    effort.seed = a.seed;
    const L1Certificate c = certify_l1(points, system, {tgt[0], tgt[1]}, effort);
    pass = c.pass;
    row.insert(row.end(), {cell(c.r_min), cell(c.r_max), cell(std::max(1.0 - c.r_min, c.r_max - 1.0)), "",
                           cell(c.evaluations), cell(pass)});
  }
  row[3] = cell(points.support_size());

  if (!a.points_out.empty()) {
    std::ofstream file;
    json j = to_json(points);
    j["method"] = a.method;
    j["q"] = a.q;
    j["seed"] = a.seed;
    open_out(a.points_out, file) << j.dump(1) << '\n';
  }
  std::ofstream file;
  CsvWriter csv(open_out(a.cert_out, file));
  csv.header(kCertificateColumns);
  csv.row(row);
  return pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------

struct Task {
  long long n = 0, m = 0, seed = 0;
};

std::vector<std::string> run_task(const ExperimentConfig& cfg, const Task& t, bool& ok) {
  const auto start = std::chrono::steady_clock::now();
  const FrequencySet q = cfg.space == "hyperbolic"
                             ? build_hyperbolic_cross(static_cast<int>(t.n), cfg.dim)
                             : build_box(cfg.dim, std::vector<int>(static_cast<std::size_t>(cfg.dim), static_cast<int>(t.n)));
  const std::string label = cfg.space + "-d" + std::to_string(cfg.dim) + "-n" + std::to_string(t.n);
  std::vector<std::string> row{label, cell(q.size())};
  std::string m_cell = cell(t.m), eps, rmin, rmax, seed = cell(t.seed);
  if (cfg.method == "budget") {
    const auto p = chaining_params_trig(q, static_cast<int>(t.n), cfg.eta, cfg.c4, cfg.bernstein, false);
    m_cell = cell(min_m_chaining(p));
    eps = cell(cfg.eta);
    seed = "";
  } else {
    const OrthonormalSystem system = real_trig_system(q);
    if (cfg.method == "random-l1") {
      const PointSet z = random_l1_pointset(cfg.dim, t.m, static_cast<std::uint64_t>(t.seed));
      L1Effort effort;
      effort.restarts = cfg.restarts;
      effort.iterations = cfg.iterations;
      effort.seed = static_cast<std::uint64_t>(t.seed);
      const L1Certificate c = certify_l1(z, system, {cfg.target_low, cfg.target_high}, effort);
      ok = ok && c.pass;
      eps = cell(std::max(1.0 - c.r_min, c.r_max - 1.0));
      rmin = cell(c.r_min);
      rmax = cell(c.r_max);
    } else {
      SpectralCertificate c;
      if (cfg.method == "random-l2") {
        c = random_l2_pointset(system, t.m, static_cast<std::uint64_t>(t.seed)).second;
      } else if (cfg.method == "grid") {
        const PointSet g = grid_P(q.max_abs_per_axis());
        m_cell = cell(g.size());
        c = certify_l2(system, g);
        seed = "";
      } else if (cfg.method == "frobenius-rga") {
        c = frobenius_rga_identity(system, static_cast<int>(t.m)).certificate;
        seed = "";
      } else {
        const OrthonormalSystem on_omega = system.restricted_to(bss_domain(q, cfg.omega_factor), "omega");
        const BssResult r = bss_weighted_sparsify(on_omega, cfg.bss_d);
        m_cell = cell(r.points.support_size());
        c = r.certificate;
        seed = "";
      }
      eps = cell(c.eps);
      rmin = cell(c.lambda_min);
      rmax = cell(c.lambda_max);
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  row.insert(row.end(), {m_cell, cfg.method, eps, rmin, rmax, seed, cfg.timing ? cell(std::round(ms)) : "0"});
  return row;
}

int cmd_experiment(const std::string& config_path, std::string out, int workers_flag) {
  ExperimentConfig cfg = ExperimentConfig::load(config_path);
  if (workers_flag > 0) cfg.workers = workers_flag;
  if (out.empty()) out = cfg.output;

  std::vector<Task> tasks;
  const bool per_n = cfg.method == "budget" || cfg.method == "grid" || cfg.method == "bss";
  const bool seedless = per_n || cfg.method == "frobenius-rga";
  for (long long n : cfg.n) {
    if (per_n) {
      tasks.push_back({n, 0, 0});
      continue;
    }
    const long long size = static_cast<long long>(
        cfg.space == "hyperbolic" ? build_hyperbolic_cross(static_cast<int>(n), cfg.dim).size()
                                  : static_cast<std::size_t>(std::pow(2 * n + 1, cfg.dim)));
    std::vector<long long> ms = cfg.m;
    for (double f : cfg.m_factor) ms.push_back(std::max(1LL, std::llround(f * static_cast<double>(size))));
    for (long long m : ms) {
      if (seedless) {
        tasks.push_back({n, m, 0});
        continue;
      }
      for (long long s : cfg.seeds) tasks.push_back({n, m, s});
    }
  }

  std::vector<std::vector<std::string>> rows(tasks.size());
  std::vector<char> ok(tasks.size(), 1);
  std::vector<std::string> errors(tasks.size());
  auto worker = [&](std::size_t first) {
    for (std::size_t i = first; i < tasks.size(); i += static_cast<std::size_t>(cfg.workers)) {
      try {
        bool pass = true;
        rows[i] = run_task(cfg, tasks[i], pass);
        ok[i] = pass;
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < cfg.workers; ++w) pool.emplace_back(worker, static_cast<std::size_t>(w));
  worker(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (!e.empty()) throw std::invalid_argument(e);

  std::ofstream file;
  std::ostream& os = open_out(out, file);
  CsvWriter csv(os);
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(cfg.hash));
  csv.comment(std::string("mdisc ") + kVersion + " config " + hash);
  csv.header({"space", "N", "m", "method", "eps", "r_min", "r_max", "seed", "runtime_ms"});
  for (const auto& r : rows) csv.row(r);
  if (!os) throw std::runtime_error("write failed for '" + out + "'");
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_budget(const std::string& levels, int dim, double eta, double c4, double bernstein, bool window,
               int cond_n, double cond_b, const std::string& out) {
  json table = json::array();
  auto emit = [&](const ChainingParams& p, json head) {
    const long long m = min_m_chaining(p);
    const ChainingBudget b = chaining_budget(p, static_cast<double>(m));
    head["eta"] = p.eta;
    head["eta_j"] = p.eta_j;
    head["J"] = b.J;
    head["min_m"] = m;
    head["total_at_min_m"] = b.total;
    head["bernstein_c"] = p.bernstein_c;
    json lv = json::array();
    for (const auto& l : b.levels)
      lv.push_back({{"j", l.j}, {"delta", l.delta}, {"log_net_size", l.log_net_size}, {"term", l.term}});
    head["levels"] = lv;
    table.push_back(head);
  };
  if (cond_n > 0) {
    emit(chaining_params_conditional(cond_n, cond_b, eta, bernstein), {{"N", cond_n}, {"B", cond_b}});
  } else {
    for (long long n : parse_int_list(levels, "--n")) {
      const FrequencySet q = build_hyperbolic_cross(static_cast<int>(n), dim);
      json head{{"n", n}, {"dim", dim}, {"Q", q.size()}, {"c4", c4}};
      emit(chaining_params_trig(q, static_cast<int>(n), eta, c4, bernstein, window), head);
    }
  }
  std::ofstream file;
  open_out(out, file) << json{{"version", kJsonSchemaVersion}, {"budgets", table}}.dump(1) << '\n';
  return 0;
}

int cmd_curve(const std::string& kind, int n, int dim, int big_n, double b, int kmax, const std::string& out) {
  EntropyCurve c;
  if (kind == "trig")
    c = entropy_curve_trig(build_hyperbolic_cross(n, dim), n);
  else if (kind == "general")
    c = entropy_curve_general(big_n);
  else
    c = entropy_curve_b(big_n, b);
  if (kmax < 1) kmax = static_cast<int>(4 * c.knee);
  std::ofstream file;
  CsvWriter csv(open_out(out, file));
  csv.header({"k", "eps_k"});
  for (int k = 1; k <= kmax; ++k) csv.row({cell(k), cell(c(k))});
  return 0;
}

int cmd_greedy(const SpaceArgs& sa, const std::string& algorithm, int m, double t, std::uint64_t seed, int terms,
               const std::string& out) {
  const FrequencySet q = build_space(sa);
  const ComplexDictionary dict = build_shifted_kernel_dict(q, q.max_abs_per_axis());
  Rng rng(seed);
  std::uniform_int_distribution<Eigen::Index> pick(0, dict.size() - 1);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  Eigen::VectorXd w(terms);
  for (auto& v : w) v = std::exponential_distribution<double>(1.0)(rng);
  w /= w.sum();
  Vec<cplx> f = Vec<cplx>::Zero(dict.ambient_dim());
  for (int i = 0; i < terms; ++i) f += w(i) * std::polar(1.0, angle(rng)) * dict.atom(pick(rng));
  const GreedyRun<cplx> run = algorithm == "oga" ? oga(f, dict, t, m) : rga(f, dict, m);
  std::ofstream file;
  CsvWriter csv(open_out(out, file));
  csv.header({"step", "residual", "bound"});
  for (std::size_t k = 0; k < run.residual_norms.size(); ++k) {
    const double kk = static_cast<double>(k + 1);
    const double bound = algorithm == "oga" ? 1.0 / std::sqrt(1.0 + kk * t * t) : 2.0 / std::sqrt(kk);
    csv.row({cell(k + 1), cell(run.residual_norms[k]), cell(bound)});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marcinkiewicz-type discretization toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // freqset
  auto* fs = app.add_subcommand("freqset", "build a frequency set and write it as JSON");
  std::string fs_kind = "hyperbolic", fs_box, fs_s, fs_out;
  int fs_dim = 1, fs_n = 2;
  fs->add_option("--kind", fs_kind)->check(CLI::IsMember({"hyperbolic", "box", "dyadic"}));
  fs->add_option("--dim", fs_dim)->check(CLI::Range(1, 6));
  fs->add_option("--n", fs_n)->check(CLI::Range(0, 16));
  fs->add_option("--N", fs_box, "box half-widths, comma separated");
  fs->add_option("--s", fs_s, "dyadic block index, comma separated");
  fs->add_option("-o,--out", fs_out, "output path (default stdout)");

  // discretize
  auto* ds = app.add_subcommand("discretize", "construct and certify a point set");
  SpaceArgs ds_space;
  DiscretizeArgs da;
  add_space_options(ds, ds_space);
  ds->add_option("--q", da.q, "1 or 2")->check(CLI::IsMember({1, 2}));
  ds->add_option("--method", da.method)->check(CLI::IsMember({"random", "frobenius-rga", "bss", "grid"}));
  ds->add_option("--m", da.m, "number of points");
  ds->add_option("--seed", da.seed);
  ds->add_option("--target", da.target, "L1 targets low,high");
  ds->add_option("--eps", da.eps, "L2 target: eps <= this")->check(CLI::PositiveNumber);
  ds->add_option("--d", da.d, "BSS oversampling d > 1");
  ds->add_option("--omega-factor", da.omega_factor, "BSS domain size as a multiple of N")->check(CLI::PositiveNumber);
  ds->add_option("--retries", da.retries, "random L2 redraws")->check(CLI::PositiveNumber);
  ds->add_option("--restarts", da.restarts)->check(CLI::NonNegativeNumber);
  ds->add_option("--iterations", da.iterations)->check(CLI::NonNegativeNumber);
  ds->add_option("--points-out", da.points_out, "point set JSON path");
  ds->add_option("--cert-out", da.cert_out, "certificate CSV path (default stdout)");

  // experiment
  auto* ex = app.add_subcommand("experiment", "run a sweep described by a key = value config");
  std::string ex_config, ex_out;
  int ex_workers = 0;
  ex->add_option("config", ex_config)->required();
  ex->add_option("-o,--out", ex_out, "CSV path (overrides the config)");
  ex->add_option("--workers", ex_workers)->check(CLI::PositiveNumber);

  // budget
  auto* bu = app.add_subcommand("budget", "chaining budget tables as JSON");
  std::string bu_levels = "2-6", bu_out;
  int bu_dim = 1, bu_cond_n = 0;
  double bu_eta = 0.125, bu_c4 = 1.0, bu_bern = 8.0, bu_b = 1.0;
  bool bu_window = false;
  bu->add_option("--n", bu_levels, "levels, e.g. 2-6");
  bu->add_option("--dim", bu_dim)->check(CLI::Range(1, 4));
  bu->add_option("--eta", bu_eta);
  bu->add_option("--c4", bu_c4);
  bu->add_option("--bernstein", bu_bern);
  bu->add_flag("--window", bu_window, "reject eta outside [2^{-2^{nd/2}}, 1/4]");
  bu->add_option("--conditional-N", bu_cond_n, "use the B-curve for an N-dimensional space");
  bu->add_option("--B", bu_b);
  bu->add_option("-o,--out", bu_out);

  // curve
  auto* cu = app.add_subcommand("curve", "entropy curve values as CSV");
  std::string cu_kind = "trig", cu_out;
  int cu_n = 2, cu_dim = 1, cu_N = 16, cu_kmax = 0;
  double cu_b = 1.0;
  cu->add_option("--kind", cu_kind)->check(CLI::IsMember({"trig", "general", "b"}));
  cu->add_option("--n", cu_n);
  cu->add_option("--dim", cu_dim);
  cu->add_option("--N", cu_N)->check(CLI::PositiveNumber);
  cu->add_option("--B", cu_b);
  cu->add_option("--kmax", cu_kmax);
  cu->add_option("-o,--out", cu_out);

  // greedy
  auto* gr = app.add_subcommand("greedy", "OGA or RGA on a random element of A_1 over the shifted-kernel grid");
  SpaceArgs gr_space;
  std::string gr_alg = "oga", gr_out;
  int gr_m = 16, gr_terms = 5;
  double gr_t = 1.0;
  std::uint64_t gr_seed = 0;
  add_space_options(gr, gr_space);
  gr->add_option("--algorithm", gr_alg)->check(CLI::IsMember({"oga", "rga"}));
  gr->add_option("--m", gr_m)->check(CLI::NonNegativeNumber);
  gr->add_option("--t", gr_t, "weakness")->check(CLI::Range(1e-6, 1.0));
  gr->add_option("--seed", gr_seed);
  gr->add_option("--terms", gr_terms)->check(CLI::PositiveNumber);
  gr->add_option("-o,--out", gr_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*fs) return cmd_freqset(fs_kind, fs_dim, fs_n, fs_box, fs_s, fs_out);
    if (*ds) return cmd_discretize(ds_space, da);
    if (*ex) return cmd_experiment(ex_config, ex_out, ex_workers);
    if (*bu) return cmd_budget(bu_levels, bu_dim, bu_eta, bu_c4, bu_bern, bu_window, bu_cond_n, bu_b, bu_out);
    if (*cu) return cmd_curve(cu_kind, cu_n, cu_dim, cu_N, cu_b, cu_kmax, cu_out);
    if (*gr) return cmd_greedy(gr_space, gr_alg, gr_m, gr_t, gr_seed, gr_terms, gr_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
