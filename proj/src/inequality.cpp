#include "manifold_landau/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "manifold_landau/search.hpp"

namespace manifold_landau {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDiagRelTol = 1e-6;

double ratio(double lhs, double rhs) {
  if (std::isnan(lhs) || std::isnan(rhs)) return kNaN;
  if (rhs == 0.0) return lhs == 0.0 ? 0.0 : INFINITY;
  return lhs / rhs;
}

bool covers_period(const Curve& curve, const TimeWindow& w) {
  const auto p = curve.period();
  return p && (w.t_max() - w.t_min()) >= *p * (1.0 - 1e-12);
}

/// Fills the derived fields of a report from its suprema and λ.
void assemble(BoundReport& r, const Curve& curve) {
  const double lambda = r.lambda.value;
  r.lhs = r.speed.value * r.speed.value;
  r.rhs = lambda > 0.0 ? r.C * r.C * r.r0.value * r.r2.value / lambda : kNaN;
  r.slack_ratio = ratio(r.lhs, r.rhs);
  r.hypotheses_ok = std::isfinite(r.sup_U) && std::isfinite(r.r0.value) && r.r0.value > 0.0 &&
                    std::isfinite(r.r2.value) && lambda > 0.0;
  r.satisfied = !std::isnan(r.rhs) && r.lhs <= r.rhs * (1.0 + kBoundRelTol);
  r.window_covers_period = covers_period(curve, r.window);

  r.notes.clear();
  if (!(r.r0.value > 0.0)) r.notes.emplace_back("gradient of U vanishes on the curve (r0 = 0); no claim is made");
  if (!(lambda > 0.0)) r.notes.emplace_back("lambda <= 0: U is not uniformly convex along the curve; no claim is made");
  if (!std::isfinite(r.sup_U)) r.notes.emplace_back("U is unbounded along the curve; no claim is made");
  if (!r.window_covers_period)
    r.notes.emplace_back("suprema are taken over the window only; it does not cover a full period");
}

}  // namespace

LandauConstant landau_constant() {
  auto p = [](double z) { return (z * z - 3.0) * z - 1.0; };
  double lo = 1.0, hi = 2.0, z = 2.0;
  for (int i = 0; i < 100; ++i) {
    const double pz = p(z);
    if (pz == 0.0) break;
    (pz < 0.0 ? lo : hi) = z;
    double next = z - pz / (3.0 * z * z - 3.0);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - z) <= 4.0 * std::numeric_limits<double>::epsilon() * z) {
      z = next;
      break;
    }
    z = next;
  }
  return {z, p(z)};
}

BoundReport theorem1_report(const Curve& curve, const AuxFunction& u, const TimeWindow& window) {
  if (!(u.manifold() == curve.manifold()))
    throw InvalidInput("auxiliary function and curve live on different manifolds");
  BoundReport r;
  r.C = landau_constant().C;
  r.window = window;
  r.speed = sup_norm(curve, window, CurveQuantity::Speed);
  r.r2 = sup_norm(curve, window, CurveQuantity::CovariantAccelNorm);
  r.r0 = sup_gradient_norm(u, curve, window);
  r.lambda = lambda_min(u, curve, window);
  r.sup_U = sup_value(u, curve, window).value;
  assemble(r, curve);
  return r;
}

SphereBoundReport theorem2_report(const Curve& curve, const TimeWindow& window) {
  if (!curve.manifold().is_sphere()) throw InvalidInput("the Chebyshev-centred bound needs a sphere curve");
  std::vector<AmbientVector> cloud(window.samples());
  for (std::size_t i = 0; i < cloud.size(); ++i) cloud[i] = curve.eval(window.time(i)).x;

  SphereBoundReport out;
  out.cloud_samples = cloud.size();
  out.center = chebyshev_center(std::span<const AmbientVector>(cloud));
  const SurfacePoint e = SurfacePoint::normalize(out.center.e);
  const AuxFunction u = AuxFunction::chordal(e);

  BoundReport& r = out.bound;
  r.C = landau_constant().C;
  r.window = window;
  r.speed = sup_norm(curve, window, CurveQuantity::Speed);
  r.r2 = sup_norm(curve, window, CurveQuantity::CovariantAccelNorm);
  r.r0 = sup_norm(curve, window, [&](const CurveEvaluation& ev) {
    const double c = e.coords().dot(ev.x);
    return std::sqrt(std::max(0.0, 1.0 - c * c));
  });
  r.lambda = lambda_min(u, curve, window);
  r.sup_U = sup_value(u, curve, window).value;
  assemble(r, curve);

  const double lambda = r.lambda.value;
  out.rhs_relaxed = lambda > 0.0
                        ? r.C * r.C * std::sqrt(std::max(0.0, 1.0 - lambda * lambda)) * r.r2.value / lambda
                        : kNaN;
  out.slack_relaxed = ratio(r.lhs, out.rhs_relaxed);
  r.notes.emplace_back(
      "sphere bound applied to the squared speed: sup|x'|^2 <= C^2 sqrt(1 - lambda^2)/lambda * sup|cov accel|");
  if (!out.center.warning.empty()) r.notes.push_back(out.center.warning);
  return out;
}

ClassicalReport classical_landau_check(const Curve& f, const TimeWindow& window) {
  if (f.manifold().is_sphere() || f.manifold().ambient_dim() != 1)
    throw InvalidInput("the classical check needs a scalar curve");
  ClassicalReport r;
  r.window = window;
  r.f = sup_norm(f, window, [](const CurveEvaluation& e) { return std::fabs(e.x[0]); });
  r.f1 = sup_norm(f, window, [](const CurveEvaluation& e) { return std::fabs(e.xdot[0]); });
  r.f2 = sup_norm(f, window, [](const CurveEvaluation& e) { return std::fabs(e.xddot[0]); });
  r.lhs = r.f1.value * r.f1.value;
  r.rhs = kClassicalConstant * r.f.value * r.f2.value;
  r.slack_ratio = ratio(r.lhs, r.rhs);
  r.satisfied = r.lhs <= r.rhs * (1.0 + kBoundRelTol);
  return r;
}

ProofDiagnostics proof_diagnostics(const Curve& curve, const AuxFunction& u, const TimeWindow& window) {
  return proof_diagnostics(curve, u, theorem1_report(curve, u, window));
}

ProofDiagnostics proof_diagnostics(const Curve& curve, const AuxFunction& u, const BoundReport& report) {
  if (!report.hypotheses_ok) throw HypothesisViolation("hypotheses fail on this curve; nothing to diagnose");
  const double r0 = report.r0.value, r2 = report.r2.value, lambda = report.lambda.value;
  const double v_cap = r0 * r0 * r0 * r2 / lambda;
  const double z0 = std::sqrt(r0 * r2 / lambda);
  const double z0_cubed = z0 * z0 * z0;
  const TimeWindow& w = report.window;
  const double h = w.step();

  ProofDiagnostics d;
  d.samples = w.samples();
  auto track = [](double value, double t, double& worst_ratio, double& worst_t) {
    if (value > worst_ratio) {
      worst_ratio = value;
      worst_t = t;
    }
  };
  for (std::size_t i = 0; i < w.samples(); ++i) {
    const double t = w.time(i);
    const CurveEvaluation e = curve.eval(t);
    const double z = e.xdot.norm();

    const double v = u.gradient(e.x).dot(e.xdot);
    if (!(v * v <= v_cap * (1.0 + kDiagRelTol) + 1e-16)) d.v_bound_ok = false;
    track(ratio(v * v, v_cap), t, d.v_worst_ratio, d.v_worst_t);

    if (i > 0 && i + 1 < w.samples() && z > 1e-8) {
      const double dz = std::fabs(curve.eval(t + h).xdot.norm() - curve.eval(t - h).xdot.norm()) / (2.0 * h);
      if (!(dz <= r2 * (1.0 + kDiagRelTol) + 1e-8)) d.speed_lipschitz_ok = false;
      track(ratio(dz, r2), t, d.speed_worst_ratio, d.speed_worst_t);
    }

    if (z >= z0) {
      const double chain = z * z * z / 3.0 - z0 * z0 * z + 2.0 * z0_cubed / 3.0;
      if (!(chain <= z0_cubed * (1.0 + kDiagRelTol) + 1e-12 * std::max(1.0, z * z * z))) d.chain_ok = false;
      track(ratio(chain, z0_cubed), t, d.chain_worst_ratio, d.chain_worst_t);
    }
  }
  return d;
}

std::vector<SeriesRow> time_series(const Curve& curve, const AuxFunction* u, const TimeWindow& window) {
  std::vector<SeriesRow> rows;
  rows.reserve(window.samples());
  for (std::size_t i = 0; i < window.samples(); ++i) {
    const double t = window.time(i);
    const CurveEvaluation e = curve.eval(t);
    SeriesRow r{t, e.xdot.norm(), covariant_accel_norm(curve.manifold(), e), kNaN, kNaN};
    if (u) {
      r.v = u->gradient(e.x).dot(e.xdot);
      r.u = u->value(e.x);
    }
    rows.push_back(r);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Sharpness probe

namespace {

AmbientVector random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    AmbientVector v{n(rng), n(rng), n(rng)};
    const double len = v.norm();
    if (len > 1e-6) return v * (1.0 / len);
  }
}

/// Structure of a compound curve; the continuous parameters are exposed to
/// the simplex polish as [margin, radii..., phases...].
struct CompoundDraw {
  AmbientVector direction;
  std::vector<double> omegas;
  std::vector<std::pair<AmbientVector, AmbientVector>> frames;
  std::vector<double> radii;
  std::vector<double> phases;
  double margin = 0.1;

  std::vector<double> parameters() const {
    std::vector<double> p{margin};
    p.insert(p.end(), radii.begin(), radii.end());
    p.insert(p.end(), phases.begin(), phases.end());
    return p;
  }
  void set_parameters(const std::vector<double>& p) {
    margin = std::fabs(p[0]) + 1e-3;
    const std::size_t k = radii.size();
    for (std::size_t i = 0; i < k; ++i) {
      radii[i] = std::fabs(p[1 + i]);
      phases[i] = p[1 + k + i];
    }
  }
  Curve build() const {
    double reach = 0.0;
    std::vector<CompoundTerm> terms;
    for (std::size_t i = 0; i < radii.size(); ++i) {
      terms.push_back({radii[i], omegas[i], phases[i], frames[i].first, frames[i].second});
      reach += radii[i];
    }
    return Curve::compound((reach + margin) * direction, std::move(terms));
  }
};

CompoundDraw draw_compound(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> term_count(1, 3), harmonic(1, 4), sign(0, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CompoundDraw d;
  d.direction = random_unit(rng);
  const int k = term_count(rng);
  for (int i = 0; i < k; ++i) {
    const AmbientVector u = random_unit(rng);
    AmbientVector v = random_unit(rng);
    v -= v.dot(u) * u;
    while (v.norm() < 1e-3) {
      v = random_unit(rng);
      v -= v.dot(u) * u;
    }
    v *= 1.0 / v.norm();
    d.frames.emplace_back(u, v);
    d.omegas.push_back(double(harmonic(rng)) * (sign(rng) ? 1.0 : -1.0));
    d.radii.push_back(0.05 + unit(rng));
    d.phases.push_back(2.0 * std::numbers::pi * unit(rng));
  }
  d.margin = 0.02 + 1.5 * unit(rng);
  return d;
}

Curve latitude_candidate(const std::vector<double>& p) {
  return Curve::latitude(std::clamp(std::fabs(p[0]), 1e-2, std::numbers::pi / 2.0), Phase::linear(1.0));
}

Curve great_circle_candidate(const std::vector<double>& p) {
  const double amplitude = std::clamp(std::fabs(p[0]), 1e-3, 1.55);
  const double omega = std::max(std::fabs(p[1]), 0.05);
  return Curve::great_circle({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, Phase::sinusoidal(amplitude, omega));
}

}  // namespace

Curve random_compound(std::mt19937_64& rng) { return draw_compound(rng).build(); }

double sharpness_ratio(const BoundReport& r) {
  if (!r.hypotheses_ok) return kNaN;
  const double denom = r.r0.value * r.r2.value;
  if (!(denom > 0.0)) return kNaN;
  return r.lambda.value * r.lhs / denom;
}

ProbeResult sharpness_probe(ProbeFamily family, std::size_t budget, std::uint64_t seed,
                            std::size_t window_samples) {
  if (budget < 1) throw InvalidInput("probe budget must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  ProbeResult res;
  res.family = family;
  res.C = landau_constant().C;
  res.seed = seed;
  res.best_q = kNaN;

  auto score = [&](const Curve& c) {
    return sharpness_ratio(theorem2_report(c, natural_window(c, window_samples)).bound);
  };
  auto record = [&](double q, const std::vector<double>& params) {
    if (std::isnan(q)) {
      ++res.skipped;
      return;
    }
    ++res.evaluated;
    res.samples.push_back({q, params});
    if (std::isnan(res.best_q) || q > res.best_q) {
      res.best_q = q;
      res.best_parameters = params;
    }
  };

  const std::size_t polish_evals = budget >= 2 ? budget / 2 : 0;
  switch (family) {
    case ProbeFamily::LatitudeSweep:
    case ProbeFamily::GreatCircleSinusoidal: {
      const bool lat = family == ProbeFamily::LatitudeSweep;
      res.parameter_names = lat ? std::vector<std::string>{"colatitude"}
                                : std::vector<std::string>{"amplitude", "omega"};
      auto build = lat ? latitude_candidate : great_circle_candidate;
      auto canonical = [&](const std::vector<double>& p) {
        return lat ? std::vector<double>{std::clamp(std::fabs(p[0]), 1e-2, std::numbers::pi / 2.0)}
                   : std::vector<double>{std::clamp(std::fabs(p[0]), 1e-3, 1.55), std::max(std::fabs(p[1]), 0.05)};
      };
      for (std::size_t k = 0; k < budget; ++k) {
        std::vector<double> p;
        if (lat)
          p = {k == 0 ? std::numbers::pi / 4.0 : 0.05 + (std::numbers::pi / 2.0 - 0.1) * unit(rng)};
        else
          p = {k == 0 ? 0.5 : 0.05 + 1.45 * unit(rng), k == 0 ? 1.0 : 0.5 + 2.5 * unit(rng)};
        record(score(build(p)), canonical(p));
      }
      if (polish_evals > 0 && !res.best_parameters.empty()) {
        std::vector<double> step(res.best_parameters.size());
        for (std::size_t i = 0; i < step.size(); ++i) step[i] = 0.1 * std::max(0.1, std::fabs(res.best_parameters[i]));
        nelder_mead(
            [&](const std::vector<double>& p) {
              const double q = score(build(p));
              record(q, canonical(p));
              return std::isnan(q) ? 1e300 : -q;
            },
            res.best_parameters, step, polish_evals);
      }
      break;
    }
    case ProbeFamily::CompoundRandom: {
      CompoundDraw best_draw;
      bool have_best = false;
      for (std::size_t k = 0; k < budget; ++k) {
        const CompoundDraw d = draw_compound(rng);
        const double before = res.best_q;
        record(score(d.build()), d.parameters());
        if (!std::isnan(res.best_q) && (std::isnan(before) || res.best_q > before)) {
          best_draw = d;
          have_best = true;
        }
      }
      if (!have_best) break;
      res.parameter_names = {"margin"};
      for (std::size_t i = 0; i < best_draw.radii.size(); ++i) res.parameter_names.push_back("radius" + std::to_string(i + 1));
      for (std::size_t i = 0; i < best_draw.radii.size(); ++i) res.parameter_names.push_back("phase" + std::to_string(i + 1));
      if (polish_evals > 0) {
        const std::vector<double> start = best_draw.parameters();
        std::vector<double> step(start.size());
        for (std::size_t i = 0; i < step.size(); ++i) step[i] = 0.1 * std::max(0.2, std::fabs(start[i]));
        nelder_mead(
            [&](const std::vector<double>& p) {
              CompoundDraw d = best_draw;
              d.set_parameters(p);
              const double q = score(d.build());
              record(q, d.parameters());
              return std::isnan(q) ? 1e300 : -q;
            },
            start, step, polish_evals);
      }
      break;
    }
  }
  if (std::isnan(res.best_q)) res.best_q = 0.0;
  res.within_bound = res.best_q <= res.C * res.C * (1.0 + 1e-6);
  return res;
}

}  // namespace manifold_landau
