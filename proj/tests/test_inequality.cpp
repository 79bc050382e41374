#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "manifold_landau/inequality.hpp"

using namespace manifold_landau;
using std::numbers::pi;

namespace {

const double kC = 2.0 * std::cos(pi / 9.0);
const SurfacePoint kNorth = SurfacePoint::make({0, 0, 1});

Curve scalar(double constant, std::vector<ScalarSeries::Sine> sines) {
  ScalarSeries s;
  s.constant = constant;
  s.sines = std::move(sines);
  return Curve::euclidean({s});
}

}  // namespace

TEST_CASE("landau constant") {
  const LandauConstant c = landau_constant();
  CHECK(std::fabs(c.C - 1.87939) <= 1e-5);
  CHECK(std::fabs(c.C - kC) <= 1e-12);
  CHECK(std::fabs(c.residual) <= 1e-12);
  CHECK(std::fabs(c.C * c.C * c.C - 3 * c.C - 1) <= 1e-12);
  CHECK(c.C > 0);
}

TEST_CASE("latitude pi/4 report with the pole as centre") {
  const double th = pi / 4;
  const BoundReport r = theorem1_report(Curve::latitude(th, Phase::linear(1.0)), AuxFunction::chordal(kNorth),
                                        TimeWindow(0, 2 * pi, 10001));
  CHECK(r.r0.value == doctest::Approx(std::sin(th)).epsilon(1e-9));
  CHECK(r.r2.value == doctest::Approx(std::sin(th) * std::cos(th)).epsilon(1e-9));
  CHECK(r.lambda.value == doctest::Approx(std::cos(th)).epsilon(1e-9));
  CHECK(r.lhs == doctest::Approx(std::sin(th) * std::sin(th)).epsilon(1e-9));
  CHECK(r.rhs == doctest::Approx(kC * kC * std::sin(th) * std::sin(th)).epsilon(1e-9));
  CHECK(std::fabs(r.slack_ratio - 1 / (kC * kC)) <= 1e-6);
  CHECK(std::fabs(r.slack_ratio - 0.28312) <= 1e-5);
  CHECK(r.hypotheses_ok);
  CHECK(r.satisfied);
  CHECK(r.window_covers_period);
  CHECK(std::fabs(sharpness_ratio(r) - 1.0) <= 1e-6);
}

TEST_CASE("constant curve satisfies the bound trivially") {
  const Curve still = Curve::great_circle({std::sqrt(0.5), 0, std::sqrt(0.5)}, {0, 1, 0}, Phase::linear(0.0));
  const BoundReport r = theorem1_report(still, AuxFunction::chordal(kNorth), TimeWindow());
  CHECK(r.lhs == 0.0);
  CHECK(r.satisfied);
  CHECK(r.hypotheses_ok);
  CHECK(r.slack_ratio == 0.0);
}

TEST_CASE("great circle through the poles violates the hypotheses") {
  const Curve poles = Curve::great_circle({0, 0, 1}, {1, 0, 0}, Phase::linear(1.0));
  const BoundReport r = theorem1_report(poles, AuxFunction::chordal(kNorth), TimeWindow(0, 2 * pi, 4001));
  CHECK(r.lambda.value == doctest::Approx(-1.0));
  CHECK_FALSE(r.hypotheses_ok);
  CHECK(std::isnan(r.rhs));
  CHECK_FALSE(r.satisfied);
  CHECK_FALSE(r.notes.empty());
  CHECK(std::isnan(sharpness_ratio(r)));
  CHECK_THROWS_AS(proof_diagnostics(poles, AuxFunction::chordal(kNorth), r), HypothesisViolation);
}

TEST_CASE("vanishing gradient is a hypothesis failure, not an error") {
  const Curve still = Curve::great_circle({0, 0, 1}, {1, 0, 0}, Phase::linear(0.0));
  const BoundReport r = theorem1_report(still, AuxFunction::chordal(kNorth), TimeWindow());
  CHECK(r.r0.value == 0.0);
  CHECK_FALSE(r.hypotheses_ok);
}

TEST_CASE("partial windows of non-periodic curves are flagged") {
  const Curve q = Curve::latitude(1.0, Phase::quadratic(1.0));
  const BoundReport r = theorem1_report(q, AuxFunction::chordal(kNorth), TimeWindow(0, 1, 101));
  CHECK_FALSE(r.window_covers_period);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("sphere report: latitude circles") {
  for (double th : {pi / 4, pi / 3}) {
    const SphereBoundReport s = theorem2_report(Curve::latitude(th, Phase::linear(1.0)), TimeWindow(0, 2 * pi, 10001));
    CHECK(std::atan2(cross(s.center.e, {0, 0, 1}).norm(), s.center.e[2]) < 1e-4);
    CHECK(s.bound.lambda.value == doctest::Approx(std::cos(th)).epsilon(1e-6));
    CHECK(std::fabs(s.bound.slack_ratio - 1 / (kC * kC)) <= 1e-5);
    CHECK(std::fabs(s.slack_relaxed - 1 / (kC * kC)) <= 1e-5);
    CHECK(s.bound.satisfied);
    CHECK(s.cloud_samples == 10001);
  }
  const SphereBoundReport s = theorem2_report(Curve::latitude(pi / 3, Phase::linear(1.0)), TimeWindow(0, 2 * pi, 10001));
  CHECK(s.bound.r2.value == doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-9));
  CHECK(s.rhs_relaxed == doctest::Approx(kC * kC * 0.75).epsilon(1e-5));
  CHECK(s.bound.lhs == doctest::Approx(0.75).epsilon(1e-9));
  bool squared_note = false;
  for (const auto& n : s.bound.notes) squared_note |= n.find("squared") != std::string::npos;
  CHECK(squared_note);
}

TEST_CASE("relaxed sphere bound is never tighter than the middle bound") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Curve c = random_compound(rng);
    const SphereBoundReport s = theorem2_report(c, TimeWindow(0, 2 * pi, 2001));
    if (!s.bound.hypotheses_ok) continue;
    CHECK(s.rhs_relaxed >= s.bound.rhs * (1 - 1e-9));
  }
}

TEST_CASE("counterexample: quadratic phase great circle") {
  const Curve c = Curve::great_circle({1, 0, 0}, {0, 1, 0}, Phase::quadratic(1.0));
  double prev_lhs = 0.0;
  for (double T : {4.0, 8.0, 16.0, 32.0}) {
    const TimeWindow w(0, T, 40001);
    const SphereBoundReport s = theorem2_report(c, w);
    CHECK(std::fabs(s.bound.speed.value - T) <= 1e-6);
    CHECK(std::fabs(s.bound.r2.value - 1.0) <= 1e-9);
    CHECK(s.bound.lambda.value <= 0.0);
    CHECK_FALSE(s.bound.hypotheses_ok);
    CHECK(s.bound.lhs > prev_lhs);
    prev_lhs = s.bound.lhs;
  }
}

TEST_CASE("classical scalar inequality") {
  const ClassicalReport s = classical_landau_check(scalar(0.0, {{1.0, 1.0, 0.0}}), TimeWindow(0, 2 * pi, 10001));
  CHECK(s.f.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.f1.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.f2.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.slack_ratio == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.satisfied);
  CHECK(s.banach_constant == 4.0);

  const ClassicalReport c = classical_landau_check(scalar(3.0, {}), TimeWindow(0, 1, 11));
  CHECK(c.lhs == 0.0);
  CHECK(c.rhs == 0.0);
  CHECK(c.satisfied);

  const ClassicalReport m =
      classical_landau_check(scalar(0.0, {{1.0, 1.0, 0.0}, {0.25, 2.0, 0.0}}), TimeWindow(0, 2 * pi, 20001));
  // Independent scan of the three norms on a finer grid.
  double f = 0, f1 = 0, f2 = 0;
  for (int i = 0; i <= 200000; ++i) {
    const double t = 2 * pi * i / 200000.0;
    f = std::max(f, std::fabs(std::sin(t) + std::sin(2 * t) / 4));
    f1 = std::max(f1, std::fabs(std::cos(t) + std::cos(2 * t) / 2));
    f2 = std::max(f2, std::fabs(-std::sin(t) - std::sin(2 * t)));
  }
  CHECK(m.f.value == doctest::Approx(f).epsilon(1e-9));
  CHECK(m.f1.value == doctest::Approx(f1).epsilon(1e-9));
  CHECK(m.f2.value == doctest::Approx(f2).epsilon(1e-9));
  CHECK(m.satisfied);

  CHECK_THROWS_AS(classical_landau_check(Curve::latitude(1.0, Phase::linear(1.0)), TimeWindow()), InvalidInput);
}

TEST_CASE("proof diagnostics: latitude circle") {
  const Curve c = Curve::latitude(pi / 4, Phase::linear(1.0));
  const ProofDiagnostics d = proof_diagnostics(c, AuxFunction::chordal(kNorth), TimeWindow(0, 2 * pi, 4001));
  CHECK(d.all_ok());
  CHECK(d.v_worst_ratio <= 1e-12);
  CHECK(d.samples == 4001);
}

TEST_CASE("proof diagnostics: geodesics") {
  // Equator with e at the pole: U∘x is constant so v vanishes, but ⟨e, x⟩ = 0
  // and the hypotheses cannot hold on a full great circle.
  const Curve equator = Curve::great_circle({1, 0, 0}, {0, 1, 0}, Phase::linear(1.0));
  const AuxFunction north = AuxFunction::chordal(kNorth);
  const TimeWindow full(0, 2 * pi, 2001);
  const BoundReport r = theorem1_report(equator, north, full);
  CHECK(r.r2.value <= 1e-12);
  CHECK_FALSE(r.hypotheses_ok);
  for (const SeriesRow& row : time_series(equator, &north, full)) CHECK(std::fabs(row.v) <= 1e-8);

  // Constant curve: r2 = 0 with the hypotheses satisfied forces v ≡ 0.
  const Curve still = Curve::great_circle({0.6, 0, 0.8}, {0, 1, 0}, Phase::linear(0.0));
  const BoundReport s = theorem1_report(still, north, full);
  REQUIRE(s.hypotheses_ok);
  CHECK(s.r2.value == 0.0);
  const ProofDiagnostics d = proof_diagnostics(still, north, s);
  CHECK(d.all_ok());
  for (const SeriesRow& row : time_series(still, &north, full)) CHECK(std::fabs(row.v) <= 1e-8);

  // On a sub-arc the window hypotheses hold but the window is not the whole
  // line: v is not zero and the v bound (which needs all of the line) fails.
  const AuxFunction tilted = AuxFunction::chordal(SurfacePoint::make({0.0, std::sqrt(0.5), std::sqrt(0.5)}));
  const BoundReport arc = theorem1_report(equator, tilted, TimeWindow(pi / 4, 3 * pi / 4, 2001));
  REQUIRE(arc.hypotheses_ok);
  CHECK_FALSE(arc.window_covers_period);
  CHECK_FALSE(arc.satisfied);
  CHECK_FALSE(proof_diagnostics(equator, tilted, arc).v_bound_ok);
}

TEST_CASE("proof diagnostics regression: great circle with sinusoidal phase") {
  // θ(t) = sin t keeps x on the arc |θ| ≤ 1 around e = (1, 0, 0), so λ = cos 1.
  const Curve c = Curve::great_circle({1, 0, 0}, {0, 1, 0}, Phase::sinusoidal(1.0, 1.0));
  const AuxFunction u = AuxFunction::chordal(SurfacePoint::make({1, 0, 0}));
  const TimeWindow w(0, 2 * pi, 10001);
  const BoundReport r = theorem1_report(c, u, w);
  REQUIRE(r.hypotheses_ok);
  CHECK(r.satisfied);
  CHECK(r.lambda.value == doctest::Approx(std::cos(1.0)).epsilon(1e-12));
  CHECK(r.r0.value == doctest::Approx(std::sin(1.0)).epsilon(1e-12));
  CHECK(r.r2.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-12));
  const ProofDiagnostics d = proof_diagnostics(c, u, r);
  CHECK(d.v_bound_ok);
  CHECK(d.speed_lipschitz_ok);
  CHECK(d.chain_ok);
  // Frozen values.
  CHECK(d.v_worst_ratio == doctest::Approx(0.19277023909031438).epsilon(1e-9));
  CHECK(d.v_worst_t == doctest::Approx(5.5405128038709588).epsilon(1e-9));
  CHECK(d.speed_worst_ratio == doctest::Approx(0.99999973681079068).epsilon(1e-9));
  CHECK(d.chain_worst_ratio == 0.0);  // speed never reaches z0 = sqrt(tan 1)
  CHECK(d.samples == 10001);
}

TEST_CASE("bound soundness on periodic random curves") {
  std::mt19937_64 rng(42);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const Curve c = random_compound(rng);
    const SphereBoundReport s = theorem2_report(c, natural_window(c, 4001));
    CHECK(s.bound.window_covers_period);
    if (!s.bound.hypotheses_ok) continue;
    ++checked;
    CHECK(s.bound.lhs <= s.bound.rhs * (1 + 1e-6));
    const ProofDiagnostics d = proof_diagnostics(c, AuxFunction::chordal(SurfacePoint::make(s.center.e)), s.bound);
    CHECK(d.all_ok());
  }
  CHECK(checked > 10);
}

TEST_CASE("sharpness probe") {
  const ProbeResult one = sharpness_probe(ProbeFamily::LatitudeSweep, 1);
  CHECK(std::fabs(one.best_q - 1.0) <= 1e-6);
  CHECK(one.best_parameters.at(0) == doctest::Approx(pi / 4));

  const ProbeResult lat = sharpness_probe(ProbeFamily::LatitudeSweep, 20);
  CHECK(std::fabs(lat.best_q - 1.0) <= 1e-5);
  for (const ProbeSample& s : lat.samples) CHECK(std::fabs(s.q - 1.0) <= 1e-5);

  const ProbeResult gc = sharpness_probe(ProbeFamily::GreatCircleSinusoidal, 30, 7);
  CHECK(gc.within_bound);
  for (const ProbeSample& s : gc.samples) CHECK(s.q <= kC * kC * (1 + 1e-6));
  CHECK(gc.seed == 7);

  const ProbeResult a = sharpness_probe(ProbeFamily::CompoundRandom, 10, 5, 1001);
  const ProbeResult b = sharpness_probe(ProbeFamily::CompoundRandom, 10, 5, 1001);
  CHECK(a.best_q == b.best_q);
  CHECK(a.within_bound);
  CHECK(a.evaluated + a.skipped >= 10);
}
