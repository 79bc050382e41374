#include "manifold_landau/auxfun.hpp"

#include <cmath>
#include <numbers>

#include "manifold_landau/search.hpp"

namespace manifold_landau {
namespace {

constexpr std::size_t kDirections = 64;
constexpr double kGradientStep = 1e-5;

void require_manifold(const AuxFunction& u, const Manifold& m) {
  if (!(u.manifold() == m)) throw InvalidInput("auxiliary function and curve live on different manifolds");
}

AmbientVector direction_at(const std::array<AmbientVector, 2>& basis, double angle) {
  return std::cos(angle) * basis[0] + std::sin(angle) * basis[1];
}

}  // namespace

AuxFunction AuxFunction::chordal(const SurfacePoint& e) {
  return AuxFunction(AuxKind::ChordalHalfSquare, Manifold::sphere(), e.coords());
}

AuxFunction AuxFunction::intrinsic(const SurfacePoint& e) {
  return AuxFunction(AuxKind::IntrinsicHalfSquare, Manifold::sphere(), e.coords());
}

AuxFunction AuxFunction::euclidean_quadratic(const AmbientVector& center) {
  if (!center.finite()) throw InvalidInput("quadratic centre must be finite");
  return AuxFunction(AuxKind::EuclideanQuadratic, Manifold::euclidean(center.size()), center);
}

void AuxFunction::guard_antipode(const AmbientVector& x) const {
  if (kind_ == AuxKind::IntrinsicHalfSquare && center_.dot(x) <= -1.0 + kAntipodeGuard)
    throw Singularity("intrinsic distance is not differentiable at the antipode of its centre");
}

double AuxFunction::value(const AmbientVector& x) const {
  manifold_.require_point(x);
  switch (kind_) {
    case AuxKind::ChordalHalfSquare:
    case AuxKind::EuclideanQuadratic:
      return 0.5 * (x - center_).squared_norm();
    case AuxKind::IntrinsicHalfSquare: {
      const double angle = std::atan2(cross(center_, x).norm(), center_.dot(x));
      return 0.5 * angle * angle;
    }
  }
  return 0.0;
}

long double AuxFunction::value_along_geodesic(const AmbientVector& x, const AmbientVector& y,
                                              long double s) const {
  const std::size_t d = x.size();
  long double p[AmbientVector::kMaxDim];
  if (manifold_.is_sphere()) {
    const long double speed = std::sqrt(static_cast<long double>(y.squared_norm()));
    const long double c = std::cos(speed * s);
    const long double sn = speed == 0.0L ? 0.0L : std::sin(speed * s) / speed;
    for (std::size_t i = 0; i < d; ++i) p[i] = c * x[i] + sn * y[i];
  } else {
    for (std::size_t i = 0; i < d; ++i) p[i] = x[i] + s * y[i];
  }
  if (kind_ == AuxKind::IntrinsicHalfSquare) {
    const long double e0 = center_[0], e1 = center_[1], e2 = center_[2];
    const long double cx = e1 * p[2] - e2 * p[1], cy = e2 * p[0] - e0 * p[2], cz = e0 * p[1] - e1 * p[0];
    const long double angle = std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), e0 * p[0] + e1 * p[1] + e2 * p[2]);
    return 0.5L * angle * angle;
  }
  long double sq = 0.0L;
  for (std::size_t i = 0; i < d; ++i) {
    const long double diff = p[i] - center_[i];
    sq += diff * diff;
  }
  return 0.5L * sq;
}

AmbientVector AuxFunction::gradient(const AmbientVector& x) const {
  manifold_.require_point(x);
  switch (kind_) {
    case AuxKind::ChordalHalfSquare:
      return center_.dot(x) * x - center_;
    case AuxKind::EuclideanQuadratic:
      return x - center_;
    case AuxKind::IntrinsicHalfSquare: {
      guard_antipode(x);
      const auto basis = tangent_basis(SurfacePoint::make(x));
      AmbientVector g(3);
      for (const AmbientVector& b : basis) {
        const long double h = kGradientStep;
        const long double slope = (value_along_geodesic(x, b, h) - value_along_geodesic(x, b, -h)) / (2.0L * h);
        g += static_cast<double>(slope) * b;
      }
      return g;
    }
  }
  return x;
}

double AuxFunction::hessian_quadratic_numeric(const AmbientVector& x, const AmbientVector& y) const {
  manifold_.require_point(x);
  guard_antipode(x);
  const long double u0 = value_along_geodesic(x, y, 0.0L);
  auto second_difference = [&](long double h) {
    return (value_along_geodesic(x, y, h) - 2.0L * u0 + value_along_geodesic(x, y, -h)) / (h * h);
  };
  const long double h = kHessianStep;
  const long double coarse = second_difference(h);
  const long double fine = second_difference(h / 2.0L);
  return static_cast<double>((4.0L * fine - coarse) / 3.0L);
}

double AuxFunction::hessian_quadratic(const AmbientVector& x, const AmbientVector& y) const {
  manifold_.require_point(x);
  switch (kind_) {
    case AuxKind::ChordalHalfSquare:
      return center_.dot(x) * y.squared_norm();
    case AuxKind::EuclideanQuadratic:
      return y.squared_norm();
    case AuxKind::IntrinsicHalfSquare:
      return hessian_quadratic_numeric(x, y);
  }
  return 0.0;
}

double aux_value(const AuxFunction& u, const SurfacePoint& x) { return u.value(x.coords()); }

TangentVector riemannian_gradient(const AuxFunction& u, const SurfacePoint& x) {
  return project_tangent(x, u.gradient(x.coords()));
}

double hessian_quadratic(const AuxFunction& u, const SurfacePoint& x, const TangentVector& y) {
  if (max_abs_diff(y.base().coords(), x.coords()) > kUnitNormTol)
    throw InvalidInput("tangent vector is based at a different point");
  return u.hessian_quadratic(x.coords(), y.vec());
}

LambdaEstimate lambda_min(const AuxFunction& u, const Curve& curve, const TimeWindow& window) {
  require_manifold(u, curve.manifold());
  LambdaEstimate est;

  if (u.kind() == AuxKind::EuclideanQuadratic) {
    est.value = est.grid_value = 1.0;
    est.argmin_t = window.t_min();
    est.argmin_direction = AmbientVector(curve.manifold().ambient_dim());
    est.argmin_direction[0] = 1.0;
    est.method = LambdaMethod::ClosedForm;
    return est;
  }

  if (u.kind() == AuxKind::ChordalHalfSquare) {
    const AmbientVector& e = u.center();
    const SupEstimate neg = sup_scalar(window, [&](double t) { return -e.dot(curve.eval(t).x); });
    est.value = -neg.value;
    est.grid_value = -neg.grid_value;
    est.argmin_t = neg.argmax_t;
    est.argmin_direction = tangent_basis(SurfacePoint::normalize(curve.eval(est.argmin_t).x))[0];
    est.method = LambdaMethod::ClosedForm;
    return est;
  }

  // Intrinsic: the form is a quadratic in the direction angle with period π.
  const double dphi = std::numbers::pi / double(kDirections);
  auto scan = [&](double t, double* best_angle) {
    const AmbientVector x = curve.eval(t).x;
    const auto basis = tangent_basis(SurfacePoint::normalize(x));
    double best = INFINITY;
    for (std::size_t j = 0; j < kDirections; ++j) {
      const double q = u.hessian_quadratic(x, direction_at(basis, dphi * double(j)));
      if (q < best) {
        best = q;
        if (best_angle) *best_angle = dphi * double(j);
      }
    }
    return best;
  };
  auto refined = [&](double t, double* best_angle) {
    double angle = 0.0;
    const double coarse = scan(t, &angle);
    const AmbientVector x = curve.eval(t).x;
    const auto basis = tangent_basis(SurfacePoint::normalize(x));
    const LineMaximum m = golden_section_max(
        [&](double a) { return -u.hessian_quadratic(x, direction_at(basis, a)); }, angle - dphi, angle + dphi, 1e-10);
    if (-m.value < coarse) {
      if (best_angle) *best_angle = m.t;
      return -m.value;
    }
    if (best_angle) *best_angle = angle;
    return coarse;
  };

  const SupEstimate grid = sup_scalar(window, [&](double t) { return -scan(t, nullptr); });
  est.grid_value = -grid.grid_value;
  est.value = -grid.value;
  est.argmin_t = grid.argmax_t;

  const double step = window.step();
  const double a = std::max(window.t_min(), est.argmin_t - step);
  const double b = std::min(window.t_max(), est.argmin_t + step);
  const LineMaximum m = golden_section_max([&](double t) { return -refined(t, nullptr); }, a, b,
                                           1e-10 * std::max(1.0, std::fabs(b)));
  if (-m.value < est.value) {
    est.value = -m.value;
    est.argmin_t = m.t;
  }
  double angle = 0.0;
  const double at_argmin = refined(est.argmin_t, &angle);
  if (at_argmin < est.value) est.value = at_argmin;
  est.argmin_direction =
      direction_at(tangent_basis(SurfacePoint::normalize(curve.eval(est.argmin_t).x)), angle);
  est.method = LambdaMethod::DirectionalScan;
  return est;
}

SupEstimate sup_gradient_norm(const AuxFunction& u, const Curve& curve, const TimeWindow& window) {
  require_manifold(u, curve.manifold());
  return sup_norm(curve, window, [&](const CurveEvaluation& e) { return u.gradient(e.x).norm(); });
}

SupEstimate sup_value(const AuxFunction& u, const Curve& curve, const TimeWindow& window) {
  require_manifold(u, curve.manifold());
  return sup_norm(curve, window, [&](const CurveEvaluation& e) { return u.value(e.x); });
}

}  // namespace manifold_landau
