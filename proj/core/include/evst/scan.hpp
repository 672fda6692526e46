#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "evst/background.hpp"
#include "evst/modal.hpp"
#include "evst/oracle.hpp"

namespace evst {

struct DetScanRow {
  Real delta{0}, eta{0}, gamma{0};
  Complex det{0};
  Real abs_det_normalized{0};
  std::string cls;
  Real dist_pole_v{0}, dist_pole_e{0}, dist_root{0}, dist_omega{0};
};

struct DetScanResult {
  std::vector<DetScanRow> rows;
};

/// Scans s = delta/eta over [-S, S] at fixed gamma; S is derived from the
/// fastest characteristic speed. Rows are emitted in scan order, so output is
/// deterministic.
DetScanResult det_scan(const BackgroundPoint& bp, int grid, Real gamma, Real class_tol = 1e-6);

void write_det_scan_csv(const DetScanResult& res, std::ostream& os);

struct RegionMapResult {
  std::vector<Real> F_axis;  // cell centers
  std::vector<Real> v_axis;
  std::vector<std::vector<RegimeClass>> cells;  // cells[iF][iv]
  // Overlay curves v(F): four exclusion surfaces then the supersonic boundary.
  std::array<std::vector<std::array<Real, 2>>, 5> curves;
  Real rho_bar{1};
  PressureLaw law;
};

RegionMapResult region_map(Real F_max, Real v_max, int nF, int nv, const PressureLaw& law,
                           Real rho_bar, Real tol = 1e-8);

void write_region_map_csv(const RegionMapResult& rm, std::ostream& os);
void write_region_map_svg(const RegionMapResult& rm, std::ostream& os);

struct SeparationSummary {
  SeparationMatrix boundary;
  Real min_nonidentical_over_trace{0};  // min along the sampled x2 traces
  Real suggested_radius{0};             // half the smallest non-identical separation
  std::vector<std::string> collisions;  // colliding non-identical pairs
  bool admissible{true};
};

/// Runs curve separation at the constant state and along perturbed traces.
/// Throws AdmissibilityViolation when a non-identical pair collides.
SeparationSummary separation_report(const ConstantBackground& cb, const PerturbationSpec& pert,
                                    int x2_samples = 9, Real x2_max = 2.0,
                                    Real collision_tol = 1e-9);

struct TriangularCheckReport {
  int samples{0};
  Real max_pattern_residual{0};
  Real max_entry_residual{0};
  std::string worst_point;
  Real measured_c_lower_bound{0};  // min of -Re(omega)/Lambda over the velocity-pole samples
  int failures{0};
};

/// Zero-pattern verification over states and frequencies drawn from the
/// velocity-pole, elastic-pole and elastic-root neighborhoods plus regular
/// points.
TriangularCheckReport triangular_check(const ConstantBackground& cb, int samples,
                                       std::uint64_t seed = 2024, Real rel_tol = 1e-9,
                                       Real neighborhood_radius = 0.03);

struct OracleCheckReport {
  Real max_angle{0};  // radians, modal E vs oracle direction
  int angle_samples{0};
  int abstentions{0};
  Real max_zero_mismatch{0};  // in delta/eta between paired minima
  int matched_minima{0};
  bool pass{false};
};

OracleCheckReport oracle_check(const ConstantBackground& cb, int angle_samples = 500,
                               int grid = 2001, Real gamma_slice = 0.05,
                               std::uint64_t seed = 77);

}  // namespace evst
