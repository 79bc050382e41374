#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "manifold_landau/geometry.hpp"

namespace manifold_landau {

/// Position, velocity and ambient acceleration of a curve at time t.
struct CurveEvaluation {
  double t = 0.0;
  AmbientVector x;
  AmbientVector xdot;
  AmbientVector xddot;
};

/// Value and first two derivatives of a phase function.
struct PhaseJet {
  double value;
  double rate;
  double accel;
};

/// Angle-valued phase drawn from a closed set of shapes with exact derivatives:
///   linear      ωt + φ
///   quadratic   αt²/2 + ωt
///   sinusoidal  A·sin(ωt) + βt
class Phase {
 public:
  struct Linear {
    double omega = 1.0;
    double phi = 0.0;
  };
  struct Quadratic {
    double alpha = 1.0;
    double omega = 0.0;
  };
  struct Sinusoidal {
    double amplitude = 1.0;
    double omega = 1.0;
    double drift = 0.0;
  };

  static Phase linear(double omega, double phi = 0.0) { return Phase(Linear{omega, phi}); }
  static Phase quadratic(double alpha, double omega = 0.0) { return Phase(Quadratic{alpha, omega}); }
  static Phase sinusoidal(double amplitude, double omega, double drift = 0.0) {
    return Phase(Sinusoidal{amplitude, omega, drift});
  }

  PhaseJet jet(double t) const;
  /// Smallest T > 0 with θ(t + T) − θ(t) ∈ 2πℤ for all t, when one exists
  /// and θ is not constant.
  std::optional<double> period() const;

  const std::variant<Linear, Quadratic, Sinusoidal>& shape() const noexcept { return shape_; }

 private:
  explicit Phase(std::variant<Linear, Quadratic, Sinusoidal> s);
  std::variant<Linear, Quadratic, Sinusoidal> shape_;
};

/// One rotating frame of a SphericalCompound: r·(cos(ωt+φ)u + sin(ωt+φ)v).
struct CompoundTerm {
  double radius = 0.0;
  double omega = 1.0;
  double phi = 0.0;
  AmbientVector u{1.0, 0.0, 0.0};
  AmbientVector v{0.0, 1.0, 0.0};
};

/// c + p·t + q·t²/2 + Σ aₖ sin(ωₖt + φₖ).
struct ScalarSeries {
  struct Sine {
    double amplitude = 1.0;
    double omega = 1.0;
    double phi = 0.0;
  };
  double constant = 0.0;
  double linear = 0.0;
  double quadratic = 0.0;
  std::vector<Sine> sines;

  PhaseJet jet(double t) const;
};

/// Great circle cos θ(t)·a + sin θ(t)·b with a ⊥ b unit vectors.
struct GreatCircle {
  AmbientVector a;
  AmbientVector b;
  Phase phase;
};

/// Circle of colatitude θ₀ about the z axis: (sin θ₀ cos φ(t), sin θ₀ sin φ(t), cos θ₀).
struct Latitude {
  double colatitude;
  Phase phase;
};

/// Radial projection onto S² of a centre vector plus rotating frames.
/// Requires ‖centre‖ > Σ|rₖ|, so the curve stays in the open hemisphere
/// around the centre direction.
struct SphericalCompound {
  AmbientVector center;
  std::vector<CompoundTerm> terms;
};

/// Curve in ℝᵈ with one ScalarSeries per coordinate.
struct EuclideanAnalytic {
  std::vector<ScalarSeries> components;
};

/// Positions on a uniform time grid with derivatives from finite differences:
/// fourth-order central stencils in the interior, second-order stencils at
/// the two nodes next to each end, and one-sided second-order at the ends.
struct Sampled {
  double t0 = 0.0;
  double step = 1.0;
  std::vector<AmbientVector> points;
  std::vector<AmbientVector> velocity;
  std::vector<AmbientVector> acceleration;

  double t_end() const noexcept { return t0 + step * double(points.size() - 1); }
};

/// A curve on S² or ℝᵈ with first and second derivatives.
class Curve {
 public:
  using Family = std::variant<GreatCircle, Latitude, SphericalCompound, EuclideanAnalytic, Sampled>;

  static Curve great_circle(const AmbientVector& a, const AmbientVector& b, const Phase& phase);
  static Curve latitude(double colatitude, const Phase& phase);
  static Curve compound(const AmbientVector& center, std::vector<CompoundTerm> terms);
  static Curve euclidean(std::vector<ScalarSeries> components);
  /// Builds a sampled curve. Sphere points are renormalized; the grid must
  /// hold at least 5 points.
  static Curve sampled(const Manifold& manifold, double t0, double step,
                       std::vector<AmbientVector> points);

  const Manifold& manifold() const noexcept { return manifold_; }
  const Family& family() const noexcept { return family_; }
  std::string family_name() const;

  /// Analytic families are exact. Sampled curves return the stencil values at
  /// grid nodes and interpolate linearly between nodes; requesting t outside
  /// the sampled span throws OutOfDomain.
  CurveEvaluation eval(double t) const;

  /// Period of the curve when it can be read off the parameters.
  std::optional<double> period() const;
  /// Time span for sampled curves.
  std::optional<std::pair<double, double>> domain() const;

 private:
  Curve(Manifold m, Family f) : manifold_(m), family_(std::move(f)) {}
  Manifold manifold_;
  Family family_;
};

/// One row of a sampled sphere curve: time and position.
struct SampleRow {
  double t;
  double x;
  double y;
  double z;
};

/// Validates rows (≥ 5 rows, uniform ascending grid within 1e-9 relative
/// jitter, points within 1e-6 of unit norm) and returns a sampled sphere
/// curve. Throws IngestionError naming the first bad row.
Curve load_sampled(const std::vector<SampleRow>& rows);

/// Reads `t,x,y,z` CSV (header required) into rows. Throws IngestionError on
/// malformed lines.
std::vector<SampleRow> read_sample_csv(std::istream& in);

/// Finite time interval standing in for ℝ in sup-norm estimates.
class TimeWindow {
 public:
  static constexpr double kDefaultMin = -20.0;
  static constexpr double kDefaultMax = 20.0;
  static constexpr std::size_t kDefaultSamples = 40001;

  TimeWindow(double t_min = kDefaultMin, double t_max = kDefaultMax,
             std::size_t samples = kDefaultSamples);

  double t_min() const noexcept { return t_min_; }
  double t_max() const noexcept { return t_max_; }
  std::size_t samples() const noexcept { return samples_; }
  double step() const noexcept { return (t_max_ - t_min_) / double(samples_ - 1); }
  double time(std::size_t i) const noexcept {
    return i + 1 == samples_ ? t_max_ : t_min_ + step() * double(i);
  }

  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;

 private:
  double t_min_;
  double t_max_;
  std::size_t samples_;
};

/// One period [0, T] for periodic curves, the sampled span for sampled
/// curves, and the default [−20, 20] otherwise.
TimeWindow natural_window(const Curve& curve, std::size_t samples = TimeWindow::kDefaultSamples);

/// Grid-plus-refinement estimate of a supremum over a window.
struct SupEstimate {
  double value = 0.0;
  double argmax_t = 0.0;
  double grid_step = 0.0;
  /// True when golden-section refinement changed the grid maximum by less
  /// than 1e-10 relative, i.e. the grid already resolved the peak.
  bool refined = false;
  /// Largest value on the uniform grid, before refinement.
  double grid_value = 0.0;
  std::size_t samples = 0;
};

/// Scalar time function for sup_scalar.
using TimeFunction = std::function<double(double)>;
/// Scalar quantity of a curve evaluation for sup_norm.
using EvalFunction = std::function<double(const CurveEvaluation&)>;

/// Maximum of f over the window grid, then golden-section refinement on
/// [t_{i-1}, t_{i+1}] around the three best grid local maxima. Ties on the
/// grid resolve to the smallest t. NaN values throw NumericFailure.
SupEstimate sup_scalar(const TimeWindow& window, const TimeFunction& f);

/// Values of f on the window grid, computed in parallel.
std::vector<double> sample_scalar(const TimeWindow& window, const TimeFunction& f);

enum class CurveQuantity { Speed, CovariantAccelNorm };

SupEstimate sup_norm(const Curve& curve, const TimeWindow& window, CurveQuantity quantity);
SupEstimate sup_norm(const Curve& curve, const TimeWindow& window, const EvalFunction& quantity);

/// ‖ẋ(t)‖.
double speed(const CurveEvaluation& e);
/// ‖∇_ẋẋ(t)‖ on the curve's manifold.
double covariant_accel_norm(const Manifold& m, const CurveEvaluation& e);

}  // namespace manifold_landau
