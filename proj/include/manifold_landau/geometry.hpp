#pragma once

#include <array>
#include <cstddef>

#include "manifold_landau/vector.hpp"

namespace manifold_landau {

/// |‖x‖ − 1| allowed for a stored point on the unit sphere.
inline constexpr double kUnitNormTol = 1e-9;
/// Inputs off the sphere by at most this much are renormalized instead of rejected.
inline constexpr double kRenormalizeTol = 1e-6;
/// |⟨v, x⟩| allowed for a tangent vector, relative to max(1, ‖v‖).
inline constexpr double kTangencyTol = 1e-9;
/// |⟨ẋ, x⟩| allowed for curve velocity data, relative to max(1, ‖ẋ‖).
inline constexpr double kCurveTangencyTol = 1e-6;

/// A point of the unit sphere S² ⊂ ℝ³.
class SurfacePoint {
 public:
  /// Accepts coordinates within 1e-9 of unit norm as given, renormalizes
  /// those within 1e-6 (setting `renormalized()`), and rejects the rest.
  static SurfacePoint make(const AmbientVector& coords);
  /// Normalizes an arbitrary non-zero 3-vector.
  static SurfacePoint normalize(const AmbientVector& v);

  const AmbientVector& coords() const noexcept { return x_; }
  bool renormalized() const noexcept { return renormalized_; }
  double operator[](std::size_t i) const noexcept { return x_[i]; }

 private:
  SurfacePoint(const AmbientVector& x, bool renormalized) : x_(x), renormalized_(renormalized) {}
  AmbientVector x_;
  bool renormalized_ = false;
};

/// A vector tangent to S² at `base()`.
class TangentVector {
 public:
  static TangentVector make(const SurfacePoint& base, const AmbientVector& vec);

  const SurfacePoint& base() const noexcept { return base_; }
  const AmbientVector& vec() const noexcept { return vec_; }
  double norm() const noexcept { return vec_.norm(); }

 private:
  friend TangentVector project_tangent(const SurfacePoint&, const AmbientVector&);
  TangentVector(const SurfacePoint& base, const AmbientVector& vec) : base_(base), vec_(vec) {}
  SurfacePoint base_;
  AmbientVector vec_;
};

/// Orthogonal projection onto T_x S²: v − ⟨v, x⟩x.
TangentVector project_tangent(const SurfacePoint& x, const AmbientVector& v);

/// Covariant acceleration ∇_ẋẋ of a sphere curve from its ambient jet,
/// computed as the tangential part of ẍ. Throws InvalidCurve when ẋ is not
/// tangent at x.
TangentVector covariant_accel(const SurfacePoint& x, const AmbientVector& xdot,
                              const AmbientVector& xddot);

/// The same quantity through the geodesic equation, ẍ + ‖ẋ‖²x. Agrees with
/// covariant_accel only when (x, ẋ, ẍ) is the jet of an actual sphere curve,
/// which makes the difference a consistency check on curve data.
AmbientVector covariant_accel_ode(const SurfacePoint& x, const AmbientVector& xdot,
                                  const AmbientVector& xddot);

/// Closed-form geodesic cos(‖y‖t)·x₀ + sin(‖y‖t)·y/‖y‖.
SurfacePoint geodesic(const SurfacePoint& x0, const TangentVector& y, double t);

/// Orthonormal basis of T_x S²; deterministic in x.
std::array<AmbientVector, 2> tangent_basis(const SurfacePoint& x);

enum class ManifoldKind { Sphere2, Euclidean };

/// The two manifolds the library computes on: S² embedded in ℝ³ and ℝᵈ.
/// Points and vectors are passed as ambient coordinates.
class Manifold {
 public:
  static Manifold sphere() { return Manifold(ManifoldKind::Sphere2, 3); }
  static Manifold euclidean(std::size_t dim);

  ManifoldKind kind() const noexcept { return kind_; }
  std::size_t ambient_dim() const noexcept { return dim_; }
  bool is_sphere() const noexcept { return kind_ == ManifoldKind::Sphere2; }

  /// Throws InvalidInput if x is not a point of the manifold.
  void require_point(const AmbientVector& x) const;
  AmbientVector covariant_accel(const AmbientVector& x, const AmbientVector& xdot,
                                const AmbientVector& xddot) const;
  AmbientVector geodesic(const AmbientVector& x0, const AmbientVector& y, double t) const;

  friend bool operator==(const Manifold&, const Manifold&) = default;

 private:
  Manifold(ManifoldKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}
  ManifoldKind kind_;
  std::size_t dim_;
};

}  // namespace manifold_landau
