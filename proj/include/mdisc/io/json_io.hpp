#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mdisc/core/frequency_set.hpp"
#include "mdisc/core/point_set.hpp"

namespace mdisc {

using json = nlohmann::json;

inline constexpr int kJsonSchemaVersion = 1;

// {"dim": d, "freqs": [[k_1,...,k_d], ...]}
inline json to_json(const FrequencySet& q) {
  json freqs = json::array();
  for (const auto& k : q.freqs()) freqs.push_back(k);
  return json{{"version", kJsonSchemaVersion}, {"dim", q.dim()}, {"freqs", freqs}};
}

inline FrequencySet frequency_set_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("freqs"))
    throw std::invalid_argument("FrequencySet JSON needs \"dim\" and \"freqs\"");
  const int dim = j.at("dim").get<int>();
  std::vector<Frequency> freqs;
  for (const auto& k : j.at("freqs")) freqs.push_back(k.get<Frequency>());
  return FrequencySet(dim, freqs);
}

// {"points": [[x_1,...,x_d], ...], "weights": [...] | null}
inline json to_json(const PointSet& ps) {
  json pts = json::array();
  for (Eigen::Index i = 0; i < ps.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < ps.dim(); ++j) row.push_back(ps.points()(i, j));
    pts.push_back(std::move(row));
  }
  json weights = nullptr;
  if (ps.weights()) {
    weights = json::array();
    for (Eigen::Index i = 0; i < ps.weights()->size(); ++i) weights.push_back((*ps.weights())(i));
  }
  return json{{"version", kJsonSchemaVersion}, {"points", pts}, {"weights", weights}};
}

inline PointSet point_set_from_json(const json& j) {
  if (!j.contains("points")) throw std::invalid_argument("PointSet JSON needs \"points\"");
  const auto& pts = j.at("points");
  const auto m = static_cast<Eigen::Index>(pts.size());
  const Eigen::Index d = m > 0 ? static_cast<Eigen::Index>(pts.at(0).size()) : 0;
  PointMatrix mat(m, d);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& row = pts.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != d)
      throw std::invalid_argument("PointSet JSON: ragged point list");
    for (Eigen::Index c = 0; c < d; ++c) mat(i, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  std::optional<Eigen::VectorXd> weights;
  if (j.contains("weights") && !j.at("weights").is_null()) {
    const auto& w = j.at("weights");
    Eigen::VectorXd v(static_cast<Eigen::Index>(w.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = w.at(static_cast<std::size_t>(i)).get<double>();
    weights = std::move(v);
  }
  return PointSet(std::move(mat), std::move(weights));
}

}  // namespace mdisc
