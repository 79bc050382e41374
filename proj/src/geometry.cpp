#include "manifold_landau/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace manifold_landau {
namespace {

void require_finite(const AmbientVector& v, const char* what) {
  if (!v.finite()) throw InvalidInput(std::string(what) + " has non-finite coordinates");
}

void require_dim3(const AmbientVector& v, const char* what) {
  if (v.size() != 3) throw InvalidInput(std::string(what) + " must be a 3-vector");
}

}  // namespace

SurfacePoint SurfacePoint::make(const AmbientVector& coords) {
  require_dim3(coords, "sphere point");
  require_finite(coords, "sphere point");
  const double n = coords.norm();
  const double off = std::fabs(n - 1.0);
  if (off <= kUnitNormTol) return SurfacePoint(coords, false);
  if (off <= kRenormalizeTol) return SurfacePoint(coords * (1.0 / n), true);
  throw InvalidInput("point is off the unit sphere (|norm - 1| = " + std::to_string(off) + ")");
}

SurfacePoint SurfacePoint::normalize(const AmbientVector& v) {
  require_dim3(v, "sphere point");
  require_finite(v, "sphere point");
  const double n = v.norm();
  if (!(n > 0.0)) throw InvalidInput("cannot normalize the zero vector");
  return SurfacePoint(v * (1.0 / n), false);
}

TangentVector TangentVector::make(const SurfacePoint& base, const AmbientVector& vec) {
  require_dim3(vec, "tangent vector");
  require_finite(vec, "tangent vector");
  if (std::fabs(vec.dot(base.coords())) > kTangencyTol * std::max(1.0, vec.norm()))
    throw InvalidInput("vector is not tangent at its base point");
  return TangentVector(base, vec);
}

TangentVector project_tangent(const SurfacePoint& x, const AmbientVector& v) {
  require_dim3(v, "vector");
  require_finite(v, "vector");
  const AmbientVector& p = x.coords();
  return TangentVector(x, v - v.dot(p) * p);
}

TangentVector covariant_accel(const SurfacePoint& x, const AmbientVector& xdot,
                              const AmbientVector& xddot) {
  require_dim3(xdot, "velocity");
  require_finite(xdot, "velocity");
  if (std::fabs(xdot.dot(x.coords())) > kCurveTangencyTol * std::max(1.0, xdot.norm()))
    throw InvalidCurve("velocity is not tangent to the sphere");
  return project_tangent(x, xddot);
}

AmbientVector covariant_accel_ode(const SurfacePoint& x, const AmbientVector& xdot,
                                  const AmbientVector& xddot) {
  require_dim3(xdot, "velocity");
  require_dim3(xddot, "acceleration");
  if (std::fabs(xdot.dot(x.coords())) > kCurveTangencyTol * std::max(1.0, xdot.norm()))
    throw InvalidCurve("velocity is not tangent to the sphere");
  return xddot + xdot.squared_norm() * x.coords();
}

SurfacePoint geodesic(const SurfacePoint& x0, const TangentVector& y, double t) {
  if (!std::isfinite(t)) throw InvalidInput("geodesic time must be finite");
  const AmbientVector& p = x0.coords();
  // Re-project so that tangency drift in y cannot leak into the norm of g(t).
  const AmbientVector w = y.vec() - y.vec().dot(p) * p;
  const double speed = w.norm();
  if (speed == 0.0) return x0;
  const double angle = speed * t;
  return SurfacePoint::normalize(std::cos(angle) * p + (std::sin(angle) / speed) * w);
}

std::array<AmbientVector, 2> tangent_basis(const SurfacePoint& x) {
  const AmbientVector& p = x.coords();
  // Cross with the coordinate axis least aligned with p.
  std::size_t axis = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::fabs(p[i]) < std::fabs(p[axis])) axis = i;
  AmbientVector a(3);
  a[axis] = 1.0;
  AmbientVector u = cross(p, a);
  u *= 1.0 / u.norm();
  AmbientVector w = cross(p, u);
  w *= 1.0 / w.norm();
  return {u, w};
}

Manifold Manifold::euclidean(std::size_t dim) {
  if (dim < 1 || dim > AmbientVector::kMaxDim)
    throw InvalidInput("Euclidean dimension must be in [1, 8]");
  return Manifold(ManifoldKind::Euclidean, dim);
}

void Manifold::require_point(const AmbientVector& x) const {
  if (x.size() != dim_) throw InvalidInput("point has the wrong ambient dimension");
  if (!x.finite()) throw InvalidInput("point has non-finite coordinates");
  if (is_sphere() && std::fabs(x.norm() - 1.0) > kRenormalizeTol)
    throw InvalidInput("point is off the unit sphere");
}

AmbientVector Manifold::covariant_accel(const AmbientVector& x, const AmbientVector& xdot,
                                        const AmbientVector& xddot) const {
  if (!is_sphere()) return xddot;
  return manifold_landau::covariant_accel(SurfacePoint::make(x), xdot, xddot).vec();
}

AmbientVector Manifold::geodesic(const AmbientVector& x0, const AmbientVector& y, double t) const {
  if (!is_sphere()) return x0 + t * y;
  const SurfacePoint p = SurfacePoint::make(x0);
  return manifold_landau::geodesic(p, project_tangent(p, y), t).coords();
}

}  // namespace manifold_landau
