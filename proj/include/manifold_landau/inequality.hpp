#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "manifold_landau/auxfun.hpp"
#include "manifold_landau/chebyshev.hpp"
#include "manifold_landau/curves.hpp"

namespace manifold_landau {

/// Constant of the scalar inequality ‖f′‖² ≤ 2‖f‖‖f″‖ on ℝ.
inline constexpr double kClassicalConstant = 2.0;
/// Constant of the same inequality for Banach-space-valued f (recorded only).
inline constexpr double kBanachConstant = 4.0;
/// Relative slack accepted by `satisfied`.
inline constexpr double kBoundRelTol = 1e-9;

/// Positive root C of ζ³ − 3ζ − 1 = 0.
struct LandauConstant {
  double C;
  double residual;  ///< C³ − 3C − 1
};

/// Safeguarded Newton iteration on ζ³ − 3ζ − 1 from 2 inside the bracket [1, 2].
LandauConstant landau_constant();

/// Every quantity of the bound ‖ẋ‖∞² ≤ (C²/λ)·‖∇U∘x‖∞·‖∇_ẋẋ‖∞ on a window.
struct BoundReport {
  double C = 0.0;
  SupEstimate speed;  ///< ‖ẋ‖∞
  SupEstimate r0;     ///< ‖∇U∘x‖∞
  SupEstimate r2;     ///< ‖∇_ẋẋ‖∞
  LambdaEstimate lambda;
  double sup_U = 0.0;
  double lhs = 0.0;          ///< ‖ẋ‖∞²
  double rhs = 0.0;          ///< C²·r0·r2/λ; NaN when λ ≤ 0
  double slack_ratio = 0.0;  ///< lhs/rhs
  bool hypotheses_ok = false;
  bool satisfied = false;
  TimeWindow window;
  /// True when the window covers at least one full period of a periodic
  /// curve, so window suprema equal suprema over ℝ up to grid resolution.
  bool window_covers_period = false;
  std::vector<std::string> notes;
};

/// Evaluates the bound for a curve and an auxiliary function. Hypothesis
/// failure (r0 = 0, λ ≤ 0, ...) is reported through `hypotheses_ok`.
BoundReport theorem1_report(const Curve& curve, const AuxFunction& u, const TimeWindow& window);

/// Sphere form with U(x) = ‖x − e‖²/2 and e the Chebyshev centre of the
/// window samples.
struct SphereBoundReport {
  BoundReport bound;             ///< tight form: r0 = sup √(1 − ⟨e, x⟩²)
  CapCenter center;
  double rhs_relaxed = 0.0;      ///< C²·√(1 − λ²)·r2/λ
  double slack_relaxed = 0.0;
  std::size_t cloud_samples = 0;  ///< points handed to the Chebyshev solver
};

SphereBoundReport theorem2_report(const Curve& curve, const TimeWindow& window);

/// Scalar inequality ‖f′‖∞² ≤ 2‖f‖∞‖f″‖∞ for a curve in ℝ¹.
struct ClassicalReport {
  SupEstimate f;
  SupEstimate f1;
  SupEstimate f2;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack_ratio = 0.0;
  bool satisfied = false;
  double constant = kClassicalConstant;
  double banach_constant = kBanachConstant;
  TimeWindow window;
};

ClassicalReport classical_landau_check(const Curve& f, const TimeWindow& window);

/// Per-sample checks of the intermediate inequalities used to derive the
/// bound. A flag is the conjunction over interior grid samples with relative
/// tolerance 1e-6; `*_worst_t` is where the ratio lhs/rhs peaked and
/// `*_worst_ratio` that ratio.
struct ProofDiagnostics {
  bool v_bound_ok = true;          ///< v² ≤ r0³r2/λ,  v = ⟨∇U(x), ẋ⟩
  bool speed_lipschitz_ok = true;  ///< |d‖ẋ‖/dt| ≤ r2 (central differences)
  bool chain_ok = true;            ///< z³/3 − z0²z + 2z0³/3 ≤ z0³ where z = ‖ẋ‖ ≥ z0 = √(r0r2/λ)
  double v_worst_t = 0.0;
  double v_worst_ratio = 0.0;
  double speed_worst_t = 0.0;
  double speed_worst_ratio = 0.0;
  double chain_worst_t = 0.0;
  double chain_worst_ratio = 0.0;
  std::size_t samples = 0;

  bool all_ok() const noexcept { return v_bound_ok && speed_lipschitz_ok && chain_ok; }
};

/// Throws HypothesisViolation when the report's hypotheses fail.
ProofDiagnostics proof_diagnostics(const Curve& curve, const AuxFunction& u, const BoundReport& report);
ProofDiagnostics proof_diagnostics(const Curve& curve, const AuxFunction& u, const TimeWindow& window);

/// One row of a sampled time series for external plotting.
struct SeriesRow {
  double t;
  double speed;
  double covariant_accel;
  double v;  ///< d/dt U(x(t)); NaN without an auxiliary function
  double u;  ///< U(x(t)); NaN without an auxiliary function
};

std::vector<SeriesRow> time_series(const Curve& curve, const AuxFunction* u, const TimeWindow& window);

// ---------------------------------------------------------------------------
// Sharpness probe

enum class ProbeFamily { LatitudeSweep, GreatCircleSinusoidal, CompoundRandom };

/// Random SphericalCompound: 1–3 terms with integer harmonics 1–4, random
/// orthonormal frames, centre norm exceeding the summed radii. The result is
/// 2π-periodic.
Curve random_compound(std::mt19937_64& rng);

struct ProbeSample {
  double q;
  std::vector<double> parameters;
};

struct ProbeResult {
  ProbeFamily family;
  std::vector<std::string> parameter_names;
  double best_q = 0.0;
  std::vector<double> best_parameters;
  /// Curves for which Q was computed (hypotheses held and r0·r2 > 0).
  std::size_t evaluated = 0;
  /// Candidates skipped because the hypotheses failed or Q is undefined.
  std::size_t skipped = 0;
  double C = 0.0;
  std::uint64_t seed = 0;
  /// best_q ≤ C²(1 + 1e-6); false would contradict the proved bound.
  bool within_bound = true;
  std::vector<ProbeSample> samples;
};

/// Maximizes Q = λ·lhs/(r0·r2) over a curve family by random search with
/// `budget` candidates followed by a Nelder–Mead polish of the best one.
/// Each candidate is scored with the Chebyshev-centred sphere report on one
/// period sampled with `window_samples` points.
ProbeResult sharpness_probe(ProbeFamily family, std::size_t budget, std::uint64_t seed = 42,
                            std::size_t window_samples = 4001);

/// Q for one curve, or NaN when it is undefined.
double sharpness_ratio(const BoundReport& report);

}  // namespace manifold_landau
