#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdisc {

/// Bad user input (unknown key, malformed value); the CLI maps it to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

inline double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": not a number: '" + s + "'");
  }
}

inline long long parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": not an integer: '" + s + "'");
  }
}

/// "1,2,5-8" -> {1,2,5,6,7,8}; empty string -> {}.
inline std::vector<long long> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<long long> out;
  if (trim(s).empty()) return out;
  for (const auto& part : split(s, ',')) {
    const auto dash = part.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(parse_int(part, what));
      continue;
    }
    const long long a = parse_int(trim(part.substr(0, dash)), what);
    const long long b = parse_int(trim(part.substr(dash + 1)), what);
    if (b < a) throw ConfigError(what + ": empty range '" + part + "'");
    for (long long v = a; v <= b; ++v) out.push_back(v);
  }
  return out;
}

inline std::vector<double> parse_double_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  if (trim(s).empty()) return out;
  for (const auto& part : split(s, ',')) out.push_back(parse_double(part, what));
  return out;
}

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Flat key = value file. '#' starts a comment; blank lines are ignored.
///
///   space        hyperbolic | box                     (default hyperbolic)
///   dim          d                                    (default 1)
///   n            levels of the hyperbolic cross or box half-widths, list
///   method       random-l2 | random-l1 | frobenius-rga | bss | grid | budget
///   m            absolute sample sizes, list
///   m_factor     sample sizes as multiples of N, list
///   seeds        list or ranges, e.g. 0-19
///   eta          budget accuracy (default 0.125)
///   c4           entropy constant (default 1)
///   bernstein    first-level Bernstein constant (default 8)
///   target       L1 targets low,high (default 0.5,1.5)
///   restarts     L1 falsification restarts (default 200)
///   iterations   L1 falsification iterations (default 500)
///   bss_d        BSS oversampling d (default 4)
///   omega_factor size of the BSS domain as a multiple of N (default 8)
///   workers      worker threads (default 1)
///   timing       true | false, write runtime_ms (default true)
///   output       CSV path (default stdout)
struct ExperimentConfig {
  std::string space = "hyperbolic";
  int dim = 1;
  std::vector<long long> n;
  std::string method = "random-l2";
  std::vector<long long> m;
  std::vector<double> m_factor;
  std::vector<long long> seeds{0};
  double eta = 0.125;
  double c4 = 1.0;
  double bernstein = 8.0;
  double target_low = 0.5, target_high = 1.5;
  int restarts = 200, iterations = 500;
  double bss_d = 4.0;
  int omega_factor = 8;
  int workers = 1;
  bool timing = true;
  std::string output;
  std::uint64_t hash = 0;  // FNV-1a of the normalised key = value lines

  static const std::set<std::string>& keys() {
    static const std::set<std::string> k{"space", "dim", "n", "method", "m", "m_factor", "seeds", "eta", "c4",
                                         "bernstein", "target", "restarts", "iterations", "bss_d", "omega_factor",
                                         "workers", "timing", "output"};
    return k;
  }

  static ExperimentConfig parse(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash_pos = line.find('#');
      if (hash_pos != std::string::npos) line.resize(hash_pos);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
      const std::string key = trim(line.substr(0, eq));
      if (!keys().count(key)) throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      if (kv.count(key)) throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
      kv[key] = trim(line.substr(eq + 1));
    }
    return from_map(kv);
  }

  static ExperimentConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    return parse(in);
  }

  static ExperimentConfig from_map(const std::map<std::string, std::string>& kv) {
    ExperimentConfig c;
    std::string normal;
    for (const auto& [k, v] : kv) normal += k + "=" + v + "\n";
    c.hash = fnv1a(normal);
    auto get = [&](const std::string& k) -> const std::string* {
      auto it = kv.find(k);
      return it == kv.end() ? nullptr : &it->second;
    };
    if (auto v = get("space")) c.space = *v;
    if (c.space != "hyperbolic" && c.space != "box") throw ConfigError("space must be hyperbolic or box");
    if (auto v = get("dim")) c.dim = static_cast<int>(parse_int(*v, "dim"));
    if (c.dim < 1 || c.dim > 4) throw ConfigError("dim must lie in 1..4");
    if (auto v = get("n")) {
      c.n = parse_int_list(*v, "n");
    } else {
      throw ConfigError("missing key n (use \"n =\" for an empty sweep)");
    }
    for (long long n : c.n)
      if (n < 0 || n > 12) throw ConfigError("n entries must lie in 0..12");
    if (auto v = get("method")) c.method = *v;
    static const std::set<std::string> methods{"random-l2", "random-l1", "frobenius-rga", "bss", "grid", "budget"};
    if (!methods.count(c.method)) throw ConfigError("unknown method '" + c.method + "'");
    if (auto v = get("m")) c.m = parse_int_list(*v, "m");
    for (long long m : c.m)
      if (m < 1) throw ConfigError("m entries must be positive");
    if (auto v = get("m_factor")) c.m_factor = parse_double_list(*v, "m_factor");
    for (double f : c.m_factor)
      if (!(f > 0)) throw ConfigError("m_factor entries must be positive");
    if (auto v = get("seeds")) c.seeds = parse_int_list(*v, "seeds");
    for (long long s : c.seeds)
      if (s < 0) throw ConfigError("seeds must be nonnegative");
    if (auto v = get("eta")) c.eta = parse_double(*v, "eta");
    if (!(c.eta > 0 && c.eta <= 0.25)) throw ConfigError("eta must lie in (0, 1/4]");
    if (auto v = get("c4")) c.c4 = parse_double(*v, "c4");
    if (auto v = get("bernstein")) c.bernstein = parse_double(*v, "bernstein");
    if (!(c.c4 > 0 && c.bernstein > 0)) throw ConfigError("c4 and bernstein must be positive");
    if (auto v = get("target")) {
      const auto t = parse_double_list(*v, "target");
      if (t.size() != 2 || !(t[0] >= 0 && t[0] <= t[1])) throw ConfigError("target must be low,high with 0 <= low <= high");
      c.target_low = t[0];
      c.target_high = t[1];
    }
    if (auto v = get("restarts")) c.restarts = static_cast<int>(parse_int(*v, "restarts"));
    if (auto v = get("iterations")) c.iterations = static_cast<int>(parse_int(*v, "iterations"));
    if (c.restarts < 0 || c.iterations < 0) throw ConfigError("restarts and iterations must be nonnegative");
    if (auto v = get("bss_d")) c.bss_d = parse_double(*v, "bss_d");
    if (!(c.bss_d > 1)) throw ConfigError("bss_d must exceed 1");
    if (auto v = get("omega_factor")) c.omega_factor = static_cast<int>(parse_int(*v, "omega_factor"));
    if (c.omega_factor < 1) throw ConfigError("omega_factor must be positive");
    if (auto v = get("workers")) c.workers = static_cast<int>(parse_int(*v, "workers"));
    if (c.workers < 1) throw ConfigError("workers must be positive");
    if (auto v = get("timing")) {
      if (*v != "true" && *v != "false") throw ConfigError("timing must be true or false");
      c.timing = *v == "true";
    }
    if (auto v = get("output")) c.output = *v;
    return c;
  }
};

}  // namespace mdisc
