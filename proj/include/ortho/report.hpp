#pragma once

// JSON serialization of reports. Key order is fixed, so outputs are
// byte-deterministic for a given input.

#include <json.hpp>

#include "ortho/criteria.hpp"
#include "ortho/graph.hpp"
#include "ortho/ring.hpp"

namespace ortho {

inline nlohmann::ordered_json to_json(const PredictionReport& rep, const Ring& R) {
  nlohmann::ordered_json doc;
  doc["ring"] = rep.ring;
  doc["n"] = rep.n;
  doc["crit"] = rep.crit.holds;
  if (rep.crit.holds) {
    nlohmann::ordered_json wit;
    for (const auto& [a0, pair] : rep.crit.witnesses)
      wit[R.format(a0)] = nlohmann::ordered_json::array(
          {R.format(pair.first), R.format(pair.second)});
    doc["crit_witnesses"] = std::move(wit);
    doc["crit_failing"] = nullptr;
  } else {
    doc["crit_witnesses"] = nullptr;
    doc["crit_failing"] = R.format(*rep.crit.failing);
  }
  doc["cond"] = rep.cond.holds;
  doc["cond_witness"] = rep.cond.witness ? nlohmann::ordered_json(R.format(*rep.cond.witness))
                                         : nlohmann::ordered_json(nullptr);
  doc["bad_annihilator"] = rep.bad_annihilator
                               ? nlohmann::ordered_json(R.format(*rep.bad_annihilator))
                               : nlohmann::ordered_json(nullptr);
  doc["predicted_diameter"] = rep.predicted_diameter;
  doc["predicted_radius"] = rep.predicted_radius;
  return doc;
}

inline nlohmann::ordered_json to_json(const GraphReport& rep) {
  nlohmann::ordered_json doc;
  doc["ring"] = rep.ring;
  doc["n"] = rep.n;
  doc["vertex_count"] = rep.vertex_count;
  doc["connected"] = rep.connected;
  auto metric = [&](const std::optional<std::size_t>& v) -> nlohmann::ordered_json {
    if (v) return *v;
    if (rep.vertex_count == 0) return nullptr;  // empty graph: no distances at all
    return "infinite";
  };
  doc["diameter"] = metric(rep.diameter);
  doc["radius"] = metric(rep.radius);
  doc["diameter_witness"] =
      rep.diameter_witness
          ? nlohmann::ordered_json::array({rep.diameter_witness->first, rep.diameter_witness->second})
          : nlohmann::ordered_json(nullptr);
  doc["center_witness"] = rep.center_witness ? nlohmann::ordered_json(*rep.center_witness)
                                             : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json hist;
  for (const auto& [ecc, count] : rep.eccentricity_histogram)
    hist[std::to_string(ecc)] = count;
  doc["eccentricity_histogram"] = std::move(hist);
  doc["component_count"] = rep.component_count;
  doc["component_diameters"] = rep.component_diameters;
  return doc;
}

} // namespace ortho
