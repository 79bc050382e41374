#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "manifold_landau/geometry.hpp"
#include "oracles.hpp"

using namespace manifold_landau;
using std::numbers::pi;

namespace {
const SurfacePoint kNorthPole = SurfacePoint::make({0.0, 0.0, 1.0});
}

TEST_CASE("project_tangent removes the radial component") {
  CHECK(max_abs_diff(project_tangent(kNorthPole, {1, 0, 0}).vec(), {1, 0, 0}) == 0.0);
  CHECK(max_abs_diff(project_tangent(kNorthPole, {0, 0, 5}).vec(), {0, 0, 0}) == 0.0);
  CHECK(max_abs_diff(project_tangent(kNorthPole, {1, 0, 1}).vec(), {1, 0, 0}) == 0.0);
  CHECK_THROWS_AS(project_tangent(kNorthPole, {NAN, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(project_tangent(kNorthPole, {INFINITY, 0, 0}), InvalidInput);
}

TEST_CASE("SurfacePoint tolerance bands") {
  const SurfacePoint exact = SurfacePoint::make({0, 0, 1.0 + 5e-10});
  CHECK_FALSE(exact.renormalized());
  const SurfacePoint drift = SurfacePoint::make({0, 0, 1.0 + 5e-7});
  CHECK(drift.renormalized());
  CHECK(drift.coords().norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(SurfacePoint::make({0, 0, 1.0 + 2e-6}), InvalidInput);
  CHECK_THROWS_AS(SurfacePoint::make({0, 0}), InvalidInput);
  CHECK_THROWS_AS(TangentVector::make(kNorthPole, {0, 1e-3, 1e-3}), InvalidInput);
}

TEST_CASE("covariant acceleration of a unit-speed great circle vanishes") {
  const SurfacePoint x = SurfacePoint::make({1, 0, 0});
  const TangentVector a = covariant_accel(x, {0, 1, 0}, {-1, 0, 0});
  CHECK(a.norm() == 0.0);
}

TEST_CASE("covariant acceleration of a latitude circle") {
  // Colatitude pi/4, unit angular speed, t = 0. Closed form: sin θ cos θ = 1/2.
  const double th = pi / 4;
  auto path = [th](double t) {
    return AmbientVector{std::sin(th) * std::cos(t), std::sin(th) * std::sin(t), std::cos(th)};
  };
  const SurfacePoint x = SurfacePoint::make(path(0.0));
  const AmbientVector xdot{0.0, std::sin(th), 0.0};
  const AmbientVector xddot{-std::sin(th), 0.0, 0.0};
  const TangentVector a = covariant_accel(x, xdot, xddot);
  CHECK(a.norm() == doctest::Approx(0.5).epsilon(1e-14));

  // Independent oracle from positions only.
  const AmbientVector fd = oracle::covariant_accel_fd(path, 0.0, 1e-3);
  CHECK(max_abs_diff(fd, a.vec()) < 1e-9);
}

TEST_CASE("covariant acceleration for quadratic phase equals the angular acceleration") {
  // x(t) = cos θ a + sin θ b with θ = t²/2: ‖∇ẋẋ‖ = |θ̈| = 1 at every t.
  for (double t : {-3.0, -0.4, 0.0, 1.3, 7.5}) {
    const double th = t * t / 2, w = t;
    const AmbientVector x{std::cos(th), std::sin(th), 0};
    const AmbientVector dir{-std::sin(th), std::cos(th), 0};
    const AmbientVector xdot = w * dir;
    const AmbientVector xddot = 1.0 * dir - (w * w) * x;
    CHECK(covariant_accel(SurfacePoint::make(x), xdot, xddot).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("projection and geodesic-equation forms agree on curve jets") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    // Rotating latitude-like jet: x on the sphere with random velocity and a
    // consistent radial acceleration ⟨ẍ, x⟩ = −‖ẋ‖².
    const AmbientVector x = oracle::random_unit(rng);
    const AmbientVector xdot = u(rng) * oracle::random_tangent(rng, x);
    const AmbientVector tangential = u(rng) * oracle::random_tangent(rng, x);
    const AmbientVector xddot = tangential - xdot.squared_norm() * x;
    const SurfacePoint p = SurfacePoint::make(x);
    const TangentVector proj = covariant_accel(p, xdot, xddot);
    CHECK(max_abs_diff(proj.vec(), covariant_accel_ode(p, xdot, xddot)) < 1e-9);
    CHECK(std::fabs(proj.vec().dot(x)) < 1e-9);
  }
}

TEST_CASE("covariant acceleration rejects non-tangent velocity") {
  CHECK_THROWS_AS(covariant_accel(kNorthPole, {1, 0, 1e-3}, {0, 0, 0}), InvalidCurve);
  CHECK_NOTHROW(covariant_accel(kNorthPole, {1, 0, 1e-7}, {0, 0, 0}));
}

TEST_CASE("geodesic closed form") {
  const SurfacePoint x0 = SurfacePoint::make({1, 0, 0});
  CHECK(max_abs_diff(geodesic(x0, TangentVector::make(x0, {0, 1, 0}), pi / 2).coords(), {0, 1, 0}) < 1e-15);
  CHECK(max_abs_diff(geodesic(x0, TangentVector::make(x0, {0, 0, 0}), 3.7).coords(), {1, 0, 0}) == 0.0);
  // Speed-2 reparametrization of the unit-speed quarter turn.
  CHECK(max_abs_diff(geodesic(x0, TangentVector::make(x0, {0, 2, 0}), pi / 4).coords(), {0, 1, 0}) < 1e-15);
}

TEST_CASE("geodesic starts at x0 with velocity y and stays on the sphere") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> speed(0.1, 5.0), time(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const SurfacePoint x0 = SurfacePoint::make(oracle::random_unit(rng));
    const TangentVector y = TangentVector::make(x0, speed(rng) * oracle::random_tangent(rng, x0.coords()));
    CHECK(max_abs_diff(geodesic(x0, y, 0.0).coords(), x0.coords()) < 1e-15);
    auto path = [&](double t) { return geodesic(x0, y, t).coords(); };
    CHECK(max_abs_diff(oracle::d1(path, 0.0, 1e-3), y.vec()) < 1e-9);
    const double t = 100.0 / y.norm() * time(rng);
    CHECK(std::fabs(geodesic(x0, y, t).coords().norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("geodesics have zero covariant acceleration by finite differences") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> speed(0.1, 3.0), time(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const SurfacePoint x0 = SurfacePoint::make(oracle::random_unit(rng));
    const TangentVector y = TangentVector::make(x0, speed(rng) * oracle::random_tangent(rng, x0.coords()));
    auto path = [&](double t) { return geodesic(x0, y, t).coords(); };
    const double t = time(rng);
    const SurfacePoint p = SurfacePoint::make(path(t));
    const AmbientVector v = oracle::d1(path, t, 1e-3);
    const AmbientVector a = oracle::d2(path, t, 1e-3);
    CHECK(covariant_accel(p, v - v.dot(p.coords()) * p.coords(), a).norm() <= 1e-6);
  }
}

TEST_CASE("Euclidean manifold is the trivial branch") {
  const Manifold r2 = Manifold::euclidean(2);
  CHECK(max_abs_diff(r2.covariant_accel({1, 2}, {3, 4}, {5, 6}), {5, 6}) == 0.0);
  CHECK(max_abs_diff(r2.geodesic({1, 2}, {3, 4}, 0.5), {2.5, 4}) == 0.0);
  CHECK_THROWS_AS(Manifold::euclidean(0), InvalidInput);
  CHECK(Manifold::sphere().is_sphere());
}
