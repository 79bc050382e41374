#pragma once

#include "manifold_landau/curves.hpp"
#include "manifold_landau/geometry.hpp"

namespace manifold_landau {

enum class AuxKind {
  ChordalHalfSquare,    ///< ‖x − e‖²/2 restricted to S²
  EuclideanQuadratic,   ///< ‖x − c‖²/2 on ℝᵈ
  IntrinsicHalfSquare,  ///< ρ(e, x)²/2 with the great-circle distance ρ
};

/// Step of the geodesic second difference behind hessian_quadratic_numeric.
inline constexpr double kHessianStep = 1e-4;
/// Intrinsic function is rejected where ⟨e, x⟩ ≤ −1 + this.
inline constexpr double kAntipodeGuard = 1e-8;

/// Auxiliary function U with value, Riemannian gradient and Hessian
/// quadratic form ⟨∇_y∇U(x), y⟩.
class AuxFunction {
 public:
  static AuxFunction chordal(const SurfacePoint& e);
  static AuxFunction intrinsic(const SurfacePoint& e);
  static AuxFunction euclidean_quadratic(const AmbientVector& center);

  AuxKind kind() const noexcept { return kind_; }
  const AmbientVector& center() const noexcept { return center_; }
  const Manifold& manifold() const noexcept { return manifold_; }

  double value(const AmbientVector& x) const;
  /// Tangent gradient. Chordal: ⟨e, x⟩x − e. Intrinsic: central differences
  /// along geodesics in an orthonormal tangent basis.
  AmbientVector gradient(const AmbientVector& x) const;
  /// Closed form where one exists (chordal ⟨e, x⟩‖y‖², quadratic ‖y‖²),
  /// otherwise hessian_quadratic_numeric.
  double hessian_quadratic(const AmbientVector& x, const AmbientVector& y) const;
  /// d²/ds² U(geodesic(x, y, s)) at s = 0 by a symmetric second difference
  /// with step 1e-4 and one Richardson step, evaluated in extended precision.
  double hessian_quadratic_numeric(const AmbientVector& x, const AmbientVector& y) const;

 private:
  AuxFunction(AuxKind kind, Manifold m, AmbientVector c) : kind_(kind), manifold_(m), center_(c) {}
  void guard_antipode(const AmbientVector& x) const;
  long double value_along_geodesic(const AmbientVector& x, const AmbientVector& y, long double s) const;

  AuxKind kind_;
  Manifold manifold_;
  AmbientVector center_;
};

double aux_value(const AuxFunction& u, const SurfacePoint& x);
TangentVector riemannian_gradient(const AuxFunction& u, const SurfacePoint& x);
double hessian_quadratic(const AuxFunction& u, const SurfacePoint& x, const TangentVector& y);

enum class LambdaMethod { ClosedForm, DirectionalScan };

/// Infimum over the window of the smallest Hessian value on unit tangents.
struct LambdaEstimate {
  double value = 0.0;
  double argmin_t = 0.0;
  AmbientVector argmin_direction;
  LambdaMethod method = LambdaMethod::ClosedForm;
  /// Smallest value on the window grid, before refinement.
  double grid_value = 0.0;
};

/// Chordal: min over the window of ⟨e, x(t)⟩ (the Hessian form is ⟨e, x⟩‖y‖²
/// in every direction), refined by golden section. Quadratic: exactly 1.
/// Intrinsic: 64 tangent directions per sample, then golden-section
/// refinement of the worst direction and time.
LambdaEstimate lambda_min(const AuxFunction& u, const Curve& curve, const TimeWindow& window);

/// sup ‖∇U(x(t))‖ over the window.
SupEstimate sup_gradient_norm(const AuxFunction& u, const Curve& curve, const TimeWindow& window);
/// sup U(x(t)) over the window.
SupEstimate sup_value(const AuxFunction& u, const Curve& curve, const TimeWindow& window);

}  // namespace manifold_landau
