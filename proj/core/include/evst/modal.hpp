#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evst/background.hpp"
#include "evst/symbols.hpp"
#include "evst/types.hpp"

namespace evst {

/// Reduced 2x2 interior symbol acting on (W2, W3): the generator of
/// d/dx2 (W2,W3) = A2x2 (W2,W3) after eliminating the algebraic components.
struct ReducedSymbol {
  Side side{Side::Right};
  Complex mu{0}, m{0};
  Real varpi{0};  // d2Phi*d1Phi*eta / <d1Phi>^2
  Mat2c A2x2;     // [[mu, -m], [m, -mu]] + i*varpi*I
};

/// Throws PoleSingularity when (tau+i*v*eta)((tau+i*v*eta)^2 + F^2 eta^2) vanishes.
ReducedSymbol reduced_symbol(const SideState& s, const PressureLaw& law, Side side,
                             const Frequency& f);

/// Per-side modal data at a frequency. omega is the branch of
/// sqrt(mu^2 - m^2) whose mode exp((omega + i*varpi) x2) decays: Re omega < 0
/// for Re tau > 0, extended to Re tau = 0 by the gamma -> 0+ limit.
/// E is the regularized eigenvector: the products alpha*mu, alpha*m are expanded
/// so the pole factors cancel before evaluation, and the larger-norm of the two
/// formula families is kept.
struct ModeData {
  Side side{Side::Right};
  Complex mu{0}, m{0};
  Real varpi{0};
  Complex omega{0};
  Complex alpha{0};
  Complex alpha_mu{0}, alpha_m{0};  // pole-cancelled products
  Vec2c E;                          // selected family, unnormalized
  Vec2c E_canonical;                // printed family for this side (r: 1, l: 2)
  int family{1};                    // 1: (-a(mu+w), -a m); 2: (a m, a(mu-w))
  Real decay_rate{0};               // Re(omega)

  Complex eigenvalue() const { return omega + Complex(0, varpi); }
};

/// Works at poles (through the cancellation) and on Re tau = 0 (by continuity).
/// Throws GlancingDegeneracy where omega vanishes.
ModeData mode_data(const SideState& s, const PressureLaw& law, Side side, const Frequency& f);

/// det(beta * blockdiag(E^r, E^l)) with the per-side canonical eigenvector
/// families, at a boundary point.
Complex lopatinskii_direct(const BackgroundPoint& bp, const Frequency& f);

/// |lopatinskii_direct| normalized by the product of eigenvector norms.
Real lopatinskii_direct_normalized(const BackgroundPoint& bp, const Frequency& f);

struct LopatinskiiFactors {
  Complex value{0};
  // prefactor, velocity pair, acoustic bracket, sonic difference, elastic brackets r/l
  std::array<Complex, 6> factors{};
};

/// The product-form determinant; factor 2 vanishes on the velocity poles,
/// factors 3 and 4 carry the elastic roots.
LopatinskiiFactors lopatinskii_factored(const BackgroundPoint& bp, const Frequency& f);

struct ElasticRoot {
  Real speed{0};       // delta/eta
  int factor{3};       // 3: acoustic bracket, 4: sonic difference
  int vk{0};           // 1..3 (V1, V2 sorted from factor 3; V3 from factor 4)
  int multiplicity{1}; // > 1 when two refined roots coincide within tolerance
};

struct RootSet {
  std::vector<Real> velocity;  // -v^r|0, -v^l|0
  std::vector<ElasticRoot> elastic;
  bool count_anomaly{false};
  std::string anomaly_note;
};

struct RootScanOptions {
  int scan_points{4096};
  Real refine_tol{1e-10};   // interval width on the speed
  Real accept_rel{1e-7};    // residual acceptance relative to the factor's scan scale
  Real merge_tol{1e-6};
};

/// Scans s = delta/eta on Re tau = 0 for zeros of the two elastic factors.
RootSet find_roots(const BackgroundPoint& bp, const RootScanOptions& opt = {});
RootSet find_roots(const ConstantBackground& cb, const RootScanOptions& opt = {});

struct WeightSigma {
  Complex value{0};
  std::vector<Complex> factors;  // (delta - speed*eta) on the normalized point
  std::vector<Real> speeds;
  int degree{1};
};

/// Degree-1 weight vanishing exactly on the root frequencies; the root speeds
/// are recomputed from the local state values, which extends the weight off
/// the boundary.
WeightSigma sigma_weight(const BackgroundPoint& bp, const Frequency& f);

enum class FreqSet { PoleVelocity, PoleElastic, RootElastic, OmegaZero, Regular };

const char* to_string(FreqSet c);

struct FrequencyClass {
  FreqSet cls{FreqSet::Regular};
  Side side{Side::Right};  // for pole/omega classes
  int detail{0};           // elastic-pole branch (+1/-1) or root index Vk
  Real distance{0};        // to the winning set
  Real dist_pole_v{0}, dist_pole_e{0}, dist_root{0}, dist_omega{0};
};

FrequencyClass classify_frequency(const BackgroundPoint& bp, const Frequency& f, Real tol);

/// Same, reusing a precomputed root set (for scan loops).
FrequencyClass classify_frequency(const BackgroundPoint& bp, const RootSet& roots,
                                  const Frequency& f, Real tol);

/// One labeled curve delta = speed * eta on the hemisphere.
struct CurveInfo {
  FreqSet family{FreqSet::Regular};
  Side side{Side::Right};
  int detail{0};
  Real speed{0};
  std::string label;
};

struct CurvePairSeparation {
  std::string a, b;
  Real distance{0};
  bool identical{false};
};

struct SeparationMatrix {
  std::vector<CurveInfo> curves;
  std::vector<CurvePairSeparation> pairs;  // all unordered curve pairs
  Real min_nonidentical{0};                // over pairs from different families
  std::vector<std::string> identical_notes;

  /// Minimum distance between two families (excluding identical pairs).
  Real family_distance(FreqSet a, FreqSet b) const;
};

SeparationMatrix curve_separation(const BackgroundPoint& bp);
SeparationMatrix curve_separation(const ConstantBackground& cb);

struct CurveBundle {
  std::vector<Real> x2;
  std::vector<CurveInfo> curves;               // labels at the boundary sample
  std::vector<std::vector<Real>> speeds;       // speeds[c][i] = curve c at x2[i]
  std::vector<std::string> anomalies;
};

/// Traces the pole/root/glancing speeds along x2 at fixed (t, x1).
CurveBundle trace_curves(const ConstantBackground& cb, const PerturbationSpec& pert,
                         const std::vector<Real>& x2_samples, Real t = 0, Real x1 = 0,
                         Real kappa0 = kDefaultKappa0);

namespace detail {
/// omega^2 in closed form (no branch choice).
Complex omega_squared(const SideState& s, const PressureLaw& law, const Frequency& f);
/// Decay-branch square root of omega^2.
Complex omega_branch(Complex omega_sq, const Frequency& f, Real v);
/// Elastic-factor values used by the root scan (extension form, per-side a1).
Complex root_factor(int which, const BackgroundPoint& bp, Real s);
std::vector<Real> glancing_speeds(const SideState& s, const PressureLaw& law);
}  // namespace detail

}  // namespace evst
