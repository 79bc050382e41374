#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "manifold_landau/auxfun.hpp"
#include "oracles.hpp"

using namespace manifold_landau;
using std::numbers::pi;

namespace {

const SurfacePoint kNorth = SurfacePoint::make({0, 0, 1});
const SurfacePoint kEquator = SurfacePoint::make({1, 0, 0});
const SurfacePoint kMid = SurfacePoint::make({std::sqrt(0.5), 0, std::sqrt(0.5)});

// Geodesic written out here so the finite differences do not reuse library code.
AmbientVector walk(const AmbientVector& x, const AmbientVector& w, double s) {
  return std::cos(s) * x + std::sin(s) * w;
}

}  // namespace

TEST_CASE("aux_value examples") {
  const AuxFunction c = AuxFunction::chordal(kNorth);
  CHECK(aux_value(c, kNorth) == 0.0);
  CHECK(aux_value(c, kEquator) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(aux_value(AuxFunction::intrinsic(kNorth), kEquator) == doctest::Approx(pi * pi / 8).epsilon(1e-15));
  CHECK(aux_value(AuxFunction::intrinsic(kNorth), kNorth) == 0.0);
}

TEST_CASE("chordal gradient examples") {
  const AuxFunction c = AuxFunction::chordal(kNorth);
  CHECK(riemannian_gradient(c, kNorth).norm() == 0.0);
  const TangentVector g = riemannian_gradient(c, kEquator);
  CHECK(max_abs_diff(g.vec(), {0, 0, -1}) < 1e-15);
  CHECK(g.norm() == doctest::Approx(1.0));
  const TangentVector m = riemannian_gradient(c, kMid);
  CHECK(max_abs_diff(m.vec(), {0.5, 0, -0.5}) < 1e-15);
  CHECK(m.norm() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  // Finite differences along the two tangent directions at kMid.
  const auto U = [](const AmbientVector& x) { return 0.5 * (x - AmbientVector{0, 0, 1}).squared_norm(); };
  const double h = 1e-5;
  for (const AmbientVector& w : {AmbientVector{0, 1, 0}, AmbientVector{std::sqrt(0.5), 0, -std::sqrt(0.5)}}) {
    const double fd = (U(walk(kMid.coords(), w, h)) - U(walk(kMid.coords(), w, -h))) / (2 * h);
    CHECK(std::fabs(fd - m.vec().dot(w)) < 1e-9);
  }
}

TEST_CASE("gradient invariants on random points") {
  std::mt19937_64 rng(11);
  const double h = 1e-5;
  for (int i = 0; i < 500; ++i) {
    const SurfacePoint e = SurfacePoint::make(oracle::random_unit(rng));
    const SurfacePoint x = SurfacePoint::make(oracle::random_unit(rng));
    const AmbientVector w = oracle::random_tangent(rng, x.coords());
    const double ex = e.coords().dot(x.coords());

    const AuxFunction c = AuxFunction::chordal(e);
    const AmbientVector g = riemannian_gradient(c, x).vec();
    CHECK(max_abs_diff(g, ex * x.coords() - e.coords()) <= 1e-12);
    CHECK(std::fabs(g.dot(x.coords())) <= 1e-9);
    CHECK(std::fabs(g.squared_norm() - (1 - ex * ex)) <= 1e-12);
    const auto Uc = [&](const AmbientVector& p) { return 0.5 * (p - e.coords()).squared_norm(); };
    CHECK(std::fabs((Uc(walk(x.coords(), w, h)) - Uc(walk(x.coords(), w, -h))) / (2 * h) - g.dot(w)) <= 1e-6);

    if (ex > -0.99) {
      const AuxFunction in = AuxFunction::intrinsic(e);
      const AmbientVector gi = riemannian_gradient(in, x).vec();
      CHECK(std::fabs(gi.dot(x.coords())) <= 1e-9);
      const auto Ui = [&](const AmbientVector& p) {
        const double d = std::acos(std::clamp(p.dot(e.coords()), -1.0, 1.0));
        return 0.5 * d * d;
      };
      CHECK(std::fabs((Ui(walk(x.coords(), w, h)) - Ui(walk(x.coords(), w, -h))) / (2 * h) - gi.dot(w)) <= 1e-6);
    }
  }
}

TEST_CASE("intrinsic function rejects the antipode") {
  const AuxFunction in = AuxFunction::intrinsic(kNorth);
  const SurfacePoint south = SurfacePoint::make({0, 0, -1});
  CHECK_THROWS_AS(riemannian_gradient(in, south), Singularity);
  CHECK_THROWS_AS(hessian_quadratic(in, south, TangentVector::make(south, {1, 0, 0})), Singularity);
}

TEST_CASE("chordal Hessian examples") {
  const AuxFunction c = AuxFunction::chordal(kNorth);
  CHECK(hessian_quadratic(c, kNorth, TangentVector::make(kNorth, {1, 0, 0})) == doctest::Approx(1.0));
  const TangentVector y = TangentVector::make(kMid, {0, 1, 0});
  CHECK(hessian_quadratic(c, kMid, y) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(std::fabs(c.hessian_quadratic_numeric(kMid.coords(), y.vec()) - std::sqrt(0.5)) <= 1e-6);
  CHECK(hessian_quadratic(c, kEquator, TangentVector::make(kEquator, {0, 2, 0})) == 0.0);
  // y must be based at x.
  CHECK_THROWS(hessian_quadratic(c, kEquator, TangentVector::make(kNorth, {0, 1, 0})));
}

TEST_CASE("chordal Hessian closed form matches the geodesic second difference") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> scale(0.1, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const AuxFunction c = AuxFunction::chordal(SurfacePoint::make(oracle::random_unit(rng)));
    const AmbientVector x = oracle::random_unit(rng);
    const AmbientVector y = scale(rng) * oracle::random_tangent(rng, x);
    worst = std::max(worst, std::fabs(c.hessian_quadratic(x, y) - c.hessian_quadratic_numeric(x, y)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("intrinsic Hessian against an independent second difference") {
  std::mt19937_64 rng(17);
  const SurfacePoint e = SurfacePoint::make(oracle::random_unit(rng));
  const AuxFunction in = AuxFunction::intrinsic(e);
  for (int i = 0; i < 100; ++i) {
    const AmbientVector x = oracle::random_unit(rng);
    if (x.dot(e.coords()) < -0.9 || x.dot(e.coords()) > 0.999) continue;
    const AmbientVector w = oracle::random_tangent(rng, x);
    const auto g = [&](double s) {
      const double d = std::acos(std::clamp(walk(x, w, s).dot(e.coords()), -1.0, 1.0));
      return 0.5 * d * d;
    };
    CHECK(std::fabs(in.hessian_quadratic(x, w) - oracle::second_derivative(g, 1e-3)) <= 1e-5);
  }
}

TEST_CASE("Hessian quadratic form is homogeneous of degree two") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> cs(-3.0, 3.0);
  const AuxFunction c = AuxFunction::chordal(SurfacePoint::make(oracle::random_unit(rng)));
  const AuxFunction q = AuxFunction::euclidean_quadratic({0.5, -1.0, 2.0});
  for (int i = 0; i < 200; ++i) {
    const AmbientVector x = oracle::random_unit(rng);
    const AmbientVector y = oracle::random_tangent(rng, x);
    const double k = cs(rng);
    CHECK(std::fabs(c.hessian_quadratic(x, k * y) - k * k * c.hessian_quadratic(x, y)) <= 1e-10);
    CHECK(std::fabs(q.hessian_quadratic(x, k * y) - k * k * q.hessian_quadratic(x, y)) <= 1e-10);
  }
}

TEST_CASE("lambda_min examples") {
  const AuxFunction c = AuxFunction::chordal(kNorth);
  const LambdaEstimate lat = lambda_min(c, Curve::latitude(pi / 4, Phase::linear(1.0)), TimeWindow());
  CHECK(lat.value == doctest::Approx(std::cos(pi / 4)).epsilon(1e-12));
  CHECK(lat.method == LambdaMethod::ClosedForm);

  const Curve poles = Curve::great_circle({0, 0, 1}, {1, 0, 0}, Phase::linear(1.0));
  CHECK(lambda_min(c, poles, TimeWindow(0, 2 * pi, 1000)).value == doctest::Approx(-1.0).epsilon(1e-12));

  const Curve still = Curve::great_circle({0, 0, 1}, {1, 0, 0}, Phase::linear(0.0));
  CHECK(lambda_min(c, still, TimeWindow()).value == 1.0);

  const AuxFunction q = AuxFunction::euclidean_quadratic({0, 0});
  CHECK(lambda_min(q, Curve::euclidean({ScalarSeries{}, ScalarSeries{}}), TimeWindow()).value == 1.0);
}

TEST_CASE("chordal lambda equals the sample minimum of the inner product") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  for (int i = 0; i < 20; ++i) {
    const SurfacePoint e = SurfacePoint::make(oracle::random_unit(rng));
    const Curve curve = Curve::great_circle({1, 0, 0}, {0, 1, 0}, Phase::sinusoidal(u(rng), u(rng), 0.1));
    const TimeWindow w(-5, 5, 501);
    double m = INFINITY;
    for (std::size_t k = 0; k < w.samples(); ++k) m = std::min(m, e.coords().dot(curve.eval(w.time(k)).x));
    const LambdaEstimate l = lambda_min(AuxFunction::chordal(e), curve, w);
    CHECK(l.grid_value == m);
    CHECK(l.value <= l.grid_value);
  }
}

TEST_CASE("intrinsic lambda lies below every sampled direction") {
  const SurfacePoint e = SurfacePoint::make({0, 0, 1});
  const AuxFunction in = AuxFunction::intrinsic(e);
  const Curve curve = Curve::latitude(1.0, Phase::linear(1.0));
  const TimeWindow w(0, 2 * pi, 41);
  const LambdaEstimate l = lambda_min(in, curve, w);
  CHECK(l.method == LambdaMethod::DirectionalScan);
  std::mt19937_64 rng(29);
  for (std::size_t k = 0; k < w.samples(); ++k) {
    const AmbientVector x = curve.eval(w.time(k)).x;
    for (int j = 0; j < 10; ++j) CHECK(l.value <= in.hessian_quadratic(x, oracle::random_tangent(rng, x)) + 1e-9);
  }
  // Along the latitude circle the smallest eigenvalue is ρ·cot ρ at ρ = 1.
  CHECK(l.value == doctest::Approx(1.0 / std::tan(1.0)).epsilon(1e-5));
}
