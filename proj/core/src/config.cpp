#include "evst/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "evst/errors.hpp"

namespace evst {

using nlohmann::json;

Bump bump_from_json(const json& j) {
  Bump b;
  b.amplitude = j.value("amplitude", 0.0);
  if (j.contains("center")) {
    const auto& c = j.at("center");
    for (int i = 0; i < 3 && i < static_cast<int>(c.size()); ++i) b.center[i] = c[i];
  }
  if (j.contains("width")) {
    const auto& w = j.at("width");
    for (int i = 0; i < 3 && i < static_cast<int>(w.size()); ++i) {
      b.width[i] = w[i];
      if (!(b.width[i] > 0)) throw DomainError("bump width must be positive");
    }
  }
  return b;
}

json bump_to_json(const Bump& b) {
  return json{{"amplitude", b.amplitude},
              {"center", {b.center[0], b.center[1], b.center[2]}},
              {"width", {b.width[0], b.width[1], b.width[2]}}};
}

Config parse_config(const json& j) {
  Config cfg;
  try {
    cfg.background.rho_bar = j.value("rho_bar", 1.0);
    cfg.background.v_bar = j.value("v_bar", 0.0);
    cfg.background.F11_bar = j.value("F11_bar", 0.0);
    cfg.background.F12_bar = j.value("F12_bar", 0.0);
    if (j.contains("pressure")) {
      const auto& p = j.at("pressure");
      const std::string kind = p.value("kind", "polytropic");
      if (kind != "polytropic")
        throw DomainError("config: unsupported pressure law kind '" + kind + "'");
      cfg.background.pressure.kappa = p.value("kappa", 0.5);
      cfg.background.pressure.gamma_ad = p.value("gamma_ad", 2.0);
      if (!(cfg.background.pressure.kappa > 0))
        throw DomainError("config: kappa must be positive");
      if (!(cfg.background.pressure.gamma_ad > 1))
        throw DomainError("config: gamma_ad must exceed 1");
    }
    if (j.contains("perturbation")) {
      const auto& p = j.at("perturbation");
      PerturbationSpec ps;
      if (p.contains("phi")) ps.phi = bump_from_json(p.at("phi"));
      if (p.contains("rho")) ps.rho = bump_from_json(p.at("rho"));
      if (p.contains("v_r")) ps.v_r = bump_from_json(p.at("v_r"));
      if (p.contains("v_l")) ps.v_l = bump_from_json(p.at("v_l"));
      if (p.contains("F11_r")) ps.F11_r = bump_from_json(p.at("F11_r"));
      if (p.contains("F11_l")) ps.F11_l = bump_from_json(p.at("F11_l"));
      if (p.contains("F12_r")) ps.F12_r = bump_from_json(p.at("F12_r"));
      if (p.contains("F12_l")) ps.F12_l = bump_from_json(p.at("F12_l"));
      cfg.perturbation = ps;
    }
  } catch (const json::exception& e) {
    throw IoError(std::string("config: malformed JSON structure: ") + e.what());
  }
  if (!(cfg.background.rho_bar > 0)) throw DomainError("config: rho_bar must be positive");
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError("cannot parse config file " + path + ": " + e.what());
  }
  return parse_config(j);
}

json matrix_to_json(const Mat7& m, Side side, int degree, const std::array<Real, 3>& location,
                    const Frequency& f) {
  json rows = json::array();
  for (int i = 0; i < 7; ++i) {
    json row = json::array();
    for (int j = 0; j < 7; ++j)
      row.push_back({{"re", m(i, j).real()}, {"im", m(i, j).imag()}});
    rows.push_back(std::move(row));
  }
  return json{{"matrix", rows},
              {"side", to_string(side)},
              {"degree", degree},
              {"location", {location[0], location[1], location[2]}},
              {"frequency", {{"gamma", f.gamma}, {"delta", f.delta}, {"eta", f.eta}}}};
}

json to_json(const RegimeClass& rc) {
  return json{{"regime", to_string(rc.regime)},
              {"excluded_index", rc.excluded_index},
              {"v_sq", rc.v_sq},
              {"F_sq", rc.F_sq},
              {"c_sq", rc.c_sq},
              {"exclusion_values", rc.exclusion_values},
              {"description", rc.describe()}};
}

json to_json(const RootSet& rs) {
  json elastic = json::array();
  for (const auto& er : rs.elastic)
    elastic.push_back({{"speed", er.speed},
                       {"factor", er.factor},
                       {"vk", er.vk},
                       {"multiplicity", er.multiplicity}});
  return json{{"velocity_roots", rs.velocity},
              {"elastic_roots", elastic},
              {"count_anomaly", rs.count_anomaly},
              {"anomaly_note", rs.anomaly_note}};
}

json to_json(const SeparationSummary& ss) {
  json pairs = json::array();
  for (const auto& pr : ss.boundary.pairs)
    pairs.push_back(
        {{"a", pr.a}, {"b", pr.b}, {"distance", pr.distance}, {"identical", pr.identical}});
  json curves = json::array();
  for (const auto& ci : ss.boundary.curves)
    curves.push_back({{"label", ci.label},
                      {"family", to_string(ci.family)},
                      {"side", to_string(ci.side)},
                      {"speed", ci.speed}});
  return json{{"curves", curves},
              {"pairs", pairs},
              {"identical", ss.boundary.identical_notes},
              {"min_nonidentical_separation", ss.min_nonidentical_over_trace},
              {"suggested_neighborhood_radius", ss.suggested_radius},
              {"admissible", ss.admissible}};
}

json to_json(const TriangularCheckReport& tr) {
  return json{{"samples", tr.samples},
              {"max_pattern_residual", tr.max_pattern_residual},
              {"max_entry_residual", tr.max_entry_residual},
              {"worst_point", tr.worst_point},
              {"measured_c_lower_bound", tr.measured_c_lower_bound},
              {"failures", tr.failures}};
}

json to_json(const OracleCheckReport& od) {
  return json{{"max_subspace_angle", od.max_angle},
              {"angle_samples", od.angle_samples},
              {"abstentions", od.abstentions},
              {"max_zero_mismatch", od.max_zero_mismatch},
              {"matched_minima", od.matched_minima},
              {"pass", od.pass}};
}

json to_json(const CurveBundle& cbd) {
  json curves = json::array();
  for (size_t c = 0; c < cbd.curves.size(); ++c)
    curves.push_back({{"label", cbd.curves[c].label},
                      {"family", to_string(cbd.curves[c].family)},
                      {"speeds", cbd.speeds[c]}});
  return json{{"x2", cbd.x2}, {"curves", curves}, {"anomalies", cbd.anomalies}};
}

}  // namespace evst
