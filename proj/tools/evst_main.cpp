// evst: stability-analysis toolkit for two-dimensional elastic vortex sheets.
//
// Subcommands: classify, roots, poles, det-scan, region-map, separation,
// triangular-check, oracle-check, trace.
// Exit codes: 0 success, 2 constraint/admissibility violation,
//             3 numerical-check failure, 4 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "evst/config.hpp"
#include "evst/errors.hpp"
#include "evst/modal.hpp"
#include "evst/oracle.hpp"
#include "evst/scan.hpp"
#include "evst/symbols.hpp"
#include "evst/triangular.hpp"

using namespace evst;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConstraint = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct CommonArgs {
  std::string config_path;
  Real gamma = 0.0;
  int grid = 1024;
  Real tol = 1e-6;
  std::string out_path;
  std::string format = "csv";
  bool dump_symbols = false;
  std::vector<Real> freq = {0.1, 0.3, 0.9};
};

void add_common(CLI::App* cmd, CommonArgs& a, bool needs_config = true) {
  auto* opt = cmd->add_option("--config", a.config_path, "background JSON config");
  if (needs_config) opt->required();
  cmd->add_option("--gamma", a.gamma, "Re tau for frequency scans");
  cmd->add_option("--grid", a.grid, "number of scan/grid points");
  cmd->add_option("--tol", a.tol, "classification/check tolerance");
  cmd->add_option("--out", a.out_path, "output file (default stdout)");
  cmd->add_option("--format", a.format, "csv|json|svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
}

std::ostream& open_out(const CommonArgs& a, std::ofstream& file) {
  if (a.out_path.empty()) return std::cout;
  file.open(a.out_path);
  if (!file) throw IoError("cannot open output file: " + a.out_path);
  return file;
}

BackgroundPoint boundary_point(const Config& cfg) {
  if (cfg.perturbation)
    return make_perturbed_background(cfg.background, *cfg.perturbation, {0, 0, 0});
  return make_constant_background(cfg.background);
}

json dump_all_symbols(const Config& cfg, const Frequency& f) {
  const BackgroundPoint bp = boundary_point(cfg);
  json out;
  for (Side side : {Side::Right, Side::Left}) {
    const SideState& s = bp.side(side);
    json entry;
    entry["A1"] = matrix_to_json(assemble_A1(s, bp.pressure, side).m, side, 0, bp.location, f);
    entry["A2"] = matrix_to_json(assemble_A2(s, bp.pressure, side).m, side, 0, bp.location, f);
    entry["A2tilde"] =
        matrix_to_json(assemble_A2tilde(s, bp.pressure, side).m, side, 0, bp.location, f);
    const TransformSet ts = assemble_T_A0(s, bp.pressure, side);
    entry["T"] = matrix_to_json(ts.T, side, 0, bp.location, f);
    entry["Tinv"] = matrix_to_json(ts.Tinv, side, 0, bp.location, f);
    entry["A0"] = matrix_to_json(ts.A0, side, 0, bp.location, f);
    entry["principal"] =
        matrix_to_json(principal_symbol(s, bp.pressure, side, f).m, side, 1, bp.location, f);
    out[to_string(side)] = std::move(entry);
  }
  const BoundarySymbols bs = boundary_symbols(bp, f);
  json b = json::array();
  for (int i = 0; i < 7; ++i) b.push_back({{"re", bs.b(i).real()}, {"im", bs.b(i).imag()}});
  out["b"] = std::move(b);
  json beta = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j)
      row.push_back({{"re", bs.beta(i, j).real()}, {"im", bs.beta(i, j).imag()}});
    beta.push_back(std::move(row));
  }
  out["beta"] = std::move(beta);
  return out;
}

int cmd_classify(const CommonArgs& a) {
  const Config cfg = load_config(a.config_path);
  const RegimeClass rc = classify_regime(cfg.background, a.tol > 0 ? a.tol : 1e-8);
  json out = to_json(rc);

  const BackgroundPoint bp = boundary_point(cfg);
  const ConstraintReport rep = check_constraints(bp, 1e-10);
  out["constraints"] = {{"max_rh", rep.max_rh},
                        {"max_eikonal", rep.max_eikonal},
                        {"pass", rep.pass}};
  if (a.dump_symbols)
    out["symbols"] = dump_all_symbols(cfg, Frequency{a.freq[0], a.freq[1], a.freq[2]});

  std::ofstream file;
  open_out(a, file) << out.dump(2) << "\n";
  return rep.pass ? kExitOk : kExitConstraint;
}

int cmd_roots(const CommonArgs& a) {
  const Config cfg = load_config(a.config_path);
  const RootSet rs = find_roots(boundary_point(cfg));
  std::ofstream file;
  std::ostream& os = open_out(a, file);
  if (a.format == "csv") {
    os << "kind,speed,factor,vk,multiplicity\n";
    for (Real v : rs.velocity) os << "velocity," << v << ",2,0,1\n";
    for (const auto& er : rs.elastic)
      os << "elastic," << er.speed << ',' << er.factor << ',' << er.vk << ','
         << er.multiplicity << "\n";
  } else {
    os << to_json(rs).dump(2) << "\n";
  }
  return rs.count_anomaly ? kExitNumerical : kExitOk;
}

int cmd_poles(const CommonArgs& a) {
  const Config cfg = load_config(a.config_path);
  const BackgroundPoint bp = boundary_point(cfg);
  json out;
  for (Side side : {Side::Right, Side::Left}) {
    const SideState& s = bp.side(side);
    const Real fs = std::sqrt(s.Fsq());
    out[to_string(side)] = {{"velocity", -s.v},
                            {"elastic_plus", -(s.v + fs)},
                            {"elastic_minus", -(s.v - fs)},
                            {"glancing", detail::glancing_speeds(s, bp.pressure)}};
  }
  std::ofstream file;
  open_out(a, file) << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_det_scan(const CommonArgs& a) {
  const Config cfg = load_config(a.config_path);
  const DetScanResult res = det_scan(boundary_point(cfg), a.grid, a.gamma, a.tol);
  std::ofstream file;
  write_det_scan_csv(res, open_out(a, file));
  return kExitOk;
}

int cmd_region_map(const CommonArgs& a, Real F_max, Real v_max) {
  const Config cfg = a.config_path.empty() ? Config{} : load_config(a.config_path);
  const RegionMapResult rm =
      region_map(F_max, v_max, a.grid, a.grid, cfg.background.pressure,
                 cfg.background.rho_bar, a.tol > 0 ? a.tol : 1e-8);
  std::ofstream file;
  std::ostream& os = open_out(a, file);
  if (a.format == "svg")
    write_region_map_svg(rm, os);
  else
    write_region_map_csv(rm, os);
  return kExitOk;
}

int cmd_separation(const CommonArgs& a) {
  const Config cfg = load_config(a.config_path);
  const SeparationSummary ss = separation_report(
      cfg.background, cfg.perturbation.value_or(PerturbationSpec{}));
  std::ofstream file;
  open_out(a, file) << to_json(ss).dump(2) << "\n";
  return kExitOk;
}

int cmd_triangular_check(const CommonArgs& a) {
  const Config cfg = load_config(a.config_path);
  const TriangularCheckReport rep =
      triangular_check(cfg.background, a.grid > 0 ? a.grid : 2000);
  std::ofstream file;
  open_out(a, file) << to_json(rep).dump(2) << "\n";
  return (rep.failures == 0 && rep.measured_c_lower_bound > 0) ? kExitOk : kExitNumerical;
}

int cmd_oracle_check(const CommonArgs& a) {
  const Config cfg = load_config(a.config_path);
  const OracleCheckReport rep = oracle_check(cfg.background, 200, a.grid,
                                             a.gamma > 0 ? a.gamma : 0.05);
  std::ofstream file;
  open_out(a, file) << to_json(rep).dump(2) << "\n";
  return rep.pass ? kExitOk : kExitNumerical;
}

int cmd_trace(const CommonArgs& a, Real x2_max) {
  const Config cfg = load_config(a.config_path);
  std::vector<Real> x2s;
  const int n = std::max(2, a.grid);
  for (int i = 0; i < n; ++i) x2s.push_back(x2_max * i / (n - 1));
  const CurveBundle bundle =
      trace_curves(cfg.background, cfg.perturbation.value_or(PerturbationSpec{}), x2s);
  std::ofstream file;
  std::ostream& os = open_out(a, file);
  if (a.format == "json") {
    os << to_json(bundle).dump(2) << "\n";
  } else {
    os << "x2";
    for (const auto& ci : bundle.curves) os << ',' << ci.label;
    os << "\n";
    for (size_t i = 0; i < bundle.x2.size(); ++i) {
      os << bundle.x2[i];
      for (const auto& speeds : bundle.speeds) os << ',' << speeds[i];
      os << "\n";
    }
  }
  return bundle.anomalies.empty() ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability analysis for two-dimensional compressible elastic vortex sheets"};
  app.require_subcommand(1);

  CommonArgs a;
  Real F_max = 2.0, v_max = 4.0, x2_max = 2.0;

  auto* classify = app.add_subcommand("classify", "regime report for a background config");
  add_common(classify, a);
  classify->add_flag("--dump-symbols", a.dump_symbols, "emit all symbol matrices as JSON");
  classify->add_option("--freq", a.freq, "frequency (gamma delta eta) for the symbol dump")
      ->expected(3);

  auto* roots = app.add_subcommand("roots", "Lopatinskii root census");
  add_common(roots, a);

  auto* poles = app.add_subcommand("poles", "pole and glancing speeds per side");
  add_common(poles, a);

  auto* dscan = app.add_subcommand("det-scan", "determinant scan CSV over delta/eta");
  add_common(dscan, a);

  auto* rmap = app.add_subcommand("region-map", "stability region map over (F, v)");
  add_common(rmap, a, /*needs_config=*/false);
  rmap->add_option("--F-max", F_max, "deformation-axis upper bound");
  rmap->add_option("--v-max", v_max, "velocity-axis upper bound");

  auto* sep = app.add_subcommand("separation", "curve separation report");
  add_common(sep, a);

  auto* tri = app.add_subcommand("triangular-check", "triangularization pattern check");
  add_common(tri, a);

  auto* orc = app.add_subcommand("oracle-check", "ODE-oracle consistency check");
  add_common(orc, a);

  auto* trace = app.add_subcommand("trace", "curve tracing along x2");
  add_common(trace, a);
  trace->add_option("--x2-max", x2_max, "trace endpoint in x2");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(a);
    if (roots->parsed()) return cmd_roots(a);
    if (poles->parsed()) return cmd_poles(a);
    if (dscan->parsed()) return cmd_det_scan(a);
    if (rmap->parsed()) return cmd_region_map(a, F_max, v_max);
    if (sep->parsed()) return cmd_separation(a);
    if (tri->parsed()) return cmd_triangular_check(a);
    if (orc->parsed()) return cmd_oracle_check(a);
    if (trace->parsed()) return cmd_trace(a, x2_max);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const AdmissibilityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstraint;
  } catch (const NondegeneracyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstraint;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstraint;
  } catch (const UnsupportedRegime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstraint;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
