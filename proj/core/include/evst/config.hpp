#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "evst/background.hpp"
#include "evst/scan.hpp"
#include "evst/symbols.hpp"

namespace evst {

struct Config {
  ConstantBackground background;
  std::optional<PerturbationSpec> perturbation;
};

/// Parses { "rho_bar", "v_bar", "F11_bar", "F12_bar",
///          "pressure": {"kind": "polytropic", "kappa", "gamma_ad"},
///          "perturbation": { "phi": {...bump...}, ... } (optional) }.
Config parse_config(const nlohmann::json& j);
Config load_config(const std::string& path);

nlohmann::json bump_to_json(const Bump& b);
Bump bump_from_json(const nlohmann::json& j);

/// Matrix dump: array-of-arrays of {"re","im"} plus side/degree/location/frequency metadata.
nlohmann::json matrix_to_json(const Mat7& m, Side side, int degree,
                              const std::array<Real, 3>& location, const Frequency& f);

nlohmann::json to_json(const RegimeClass& rc);
nlohmann::json to_json(const RootSet& rs);
nlohmann::json to_json(const SeparationSummary& ss);
nlohmann::json to_json(const TriangularCheckReport& tr);
nlohmann::json to_json(const OracleCheckReport& od);
nlohmann::json to_json(const CurveBundle& cbd);

}  // namespace evst
