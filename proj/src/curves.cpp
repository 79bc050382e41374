#include "manifold_landau/curves.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <string>

#include "manifold_landau/parallel.hpp"
#include "manifold_landau/search.hpp"

namespace manifold_landau {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

/// 2π/base when every frequency is an integer multiple of the smallest non-zero one.
std::optional<double> common_period(const std::vector<double>& omegas) {
  double base = 0.0;
  for (double w : omegas)
    if (w != 0.0 && (base == 0.0 || std::fabs(w) < base)) base = std::fabs(w);
  if (base == 0.0) return std::nullopt;
  // Fundamental is base / k for the smallest k making every ratio integral.
  for (int k = 1; k <= 64; ++k) {
    const double f = base / k;
    bool ok = true;
    for (double w : omegas) {
      const double ratio = w / f;
      if (std::fabs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, std::fabs(ratio))) ok = false;
    }
    if (ok) return kTwoPi / f;
  }
  return std::nullopt;
}

void require_unit(const AmbientVector& v, const char* what) {
  if (v.size() != 3 || !v.finite() || std::fabs(v.norm() - 1.0) > kUnitNormTol)
    throw InvalidInput(std::string(what) + " must be a unit 3-vector");
}

CurveEvaluation eval_great_circle(const GreatCircle& g, double t) {
  const PhaseJet p = g.phase.jet(t);
  const double c = std::cos(p.value), s = std::sin(p.value);
  const AmbientVector x = c * g.a + s * g.b;
  const AmbientVector dir = -s * g.a + c * g.b;
  return {t, x, p.rate * dir, p.accel * dir - (p.rate * p.rate) * x};
}

CurveEvaluation eval_latitude(const Latitude& l, double t) {
  const PhaseJet p = l.phase.jet(t);
  const double st = std::sin(l.colatitude), ct = std::cos(l.colatitude);
  const double c = std::cos(p.value), s = std::sin(p.value);
  const AmbientVector x{st * c, st * s, ct};
  const AmbientVector dir{-st * s, st * c, 0.0};
  const AmbientVector radial{st * c, st * s, 0.0};
  return {t, x, p.rate * dir, p.accel * dir - (p.rate * p.rate) * radial};
}

CurveEvaluation eval_compound(const SphericalCompound& c, double t) {
  AmbientVector w = c.center, wd(3), wdd(3);
  for (const CompoundTerm& k : c.terms) {
    const double psi = k.omega * t + k.phi;
    const double cs = std::cos(psi), sn = std::sin(psi);
    w += k.radius * (cs * k.u + sn * k.v);
    wd += (k.radius * k.omega) * (-sn * k.u + cs * k.v);
    wdd += (-k.radius * k.omega * k.omega) * (cs * k.u + sn * k.v);
  }
  const double n = w.norm();
  const AmbientVector x = (1.0 / n) * w;
  const double ndot = wd.dot(x);
  const AmbientVector xd = (1.0 / n) * (wd - ndot * x);
  const double nddot = wdd.dot(x) + wd.dot(xd);
  const AmbientVector xdd = (1.0 / n) * (wdd - nddot * x - (2.0 * ndot) * xd);
  return {t, x, xd, xdd};
}

CurveEvaluation eval_euclidean(const EuclideanAnalytic& e, double t) {
  const std::size_t d = e.components.size();
  CurveEvaluation r{t, AmbientVector(d), AmbientVector(d), AmbientVector(d)};
  for (std::size_t i = 0; i < d; ++i) {
    const PhaseJet j = e.components[i].jet(t);
    r.x[i] = j.value;
    r.xdot[i] = j.rate;
    r.xddot[i] = j.accel;
  }
  return r;
}

CurveEvaluation eval_sampled(const Sampled& s, const Manifold& m, double t) {
  const double pos = (t - s.t0) / s.step;
  const double last = double(s.points.size() - 1);
  if (!(pos >= -1e-9 && pos <= last + 1e-9))
    throw OutOfDomain("t = " + std::to_string(t) + " is outside the sampled span [" +
                      std::to_string(s.t0) + ", " + std::to_string(s.t_end()) + "]");
  const double nearest = std::round(pos);
  if (std::fabs(pos - nearest) <= 1e-9) {
    const auto i = static_cast<std::size_t>(std::clamp(nearest, 0.0, last));
    return {t, s.points[i], s.velocity[i], s.acceleration[i]};
  }
  const auto i = static_cast<std::size_t>(std::floor(pos));
  const double w = pos - double(i);
  auto lerp = [&](const std::vector<AmbientVector>& v) { return (1.0 - w) * v[i] + w * v[i + 1]; };
  AmbientVector x = lerp(s.points);
  AmbientVector xd = lerp(s.velocity);
  if (m.is_sphere()) {
    x *= 1.0 / x.norm();
    xd -= xd.dot(x) * x;
  }
  return {t, x, xd, lerp(s.acceleration)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Phase

Phase::Phase(std::variant<Linear, Quadratic, Sinusoidal> s) : shape_(s) {
  const bool ok = std::visit(
      Overloaded{[](const Linear& l) { return std::isfinite(l.omega) && std::isfinite(l.phi); },
                 [](const Quadratic& q) { return std::isfinite(q.alpha) && std::isfinite(q.omega); },
                 [](const Sinusoidal& s) {
                   return std::isfinite(s.amplitude) && std::isfinite(s.omega) && std::isfinite(s.drift);
                 }},
      shape_);
  if (!ok) throw InvalidInput("phase parameters must be finite");
}

PhaseJet Phase::jet(double t) const {
  return std::visit(
      Overloaded{[t](const Linear& l) { return PhaseJet{l.omega * t + l.phi, l.omega, 0.0}; },
                 [t](const Quadratic& q) {
                   return PhaseJet{0.5 * q.alpha * t * t + q.omega * t, q.alpha * t + q.omega, q.alpha};
                 },
                 [t](const Sinusoidal& s) {
                   const double a = s.omega * t;
                   return PhaseJet{s.amplitude * std::sin(a) + s.drift * t,
                                   s.amplitude * s.omega * std::cos(a) + s.drift,
                                   -s.amplitude * s.omega * s.omega * std::sin(a)};
                 }},
      shape_);
}

std::optional<double> Phase::period() const {
  auto linear_period = [](double omega) -> std::optional<double> {
    if (omega == 0.0) return std::nullopt;
    return kTwoPi / std::fabs(omega);
  };
  return std::visit(
      Overloaded{[&](const Linear& l) { return linear_period(l.omega); },
                 [&](const Quadratic& q) -> std::optional<double> {
                   if (q.alpha != 0.0) return std::nullopt;
                   return linear_period(q.omega);
                 },
                 [&](const Sinusoidal& s) -> std::optional<double> {
                   if (s.amplitude == 0.0 || s.omega == 0.0) return linear_period(s.drift);
                   const double ratio = s.drift / std::fabs(s.omega);
                   if (std::fabs(ratio - std::round(ratio)) > 1e-12) return std::nullopt;
                   return kTwoPi / std::fabs(s.omega);
                 }},
      shape_);
}

PhaseJet ScalarSeries::jet(double t) const {
  PhaseJet j{constant + linear * t + 0.5 * quadratic * t * t, linear + quadratic * t, quadratic};
  for (const Sine& s : sines) {
    const double a = s.omega * t + s.phi;
    j.value += s.amplitude * std::sin(a);
    j.rate += s.amplitude * s.omega * std::cos(a);
    j.accel -= s.amplitude * s.omega * s.omega * std::sin(a);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Curve construction

Curve Curve::great_circle(const AmbientVector& a, const AmbientVector& b, const Phase& phase) {
  require_unit(a, "great-circle axis a");
  require_unit(b, "great-circle axis b");
  if (std::fabs(a.dot(b)) > kUnitNormTol) throw InvalidInput("great-circle axes must be orthogonal");
  return Curve(Manifold::sphere(), GreatCircle{a, b, phase});
}

Curve Curve::latitude(double colatitude, const Phase& phase) {
  if (!(colatitude > 0.0 && colatitude < std::numbers::pi))
    throw InvalidInput("colatitude must lie in (0, pi)");
  return Curve(Manifold::sphere(), Latitude{colatitude, phase});
}

Curve Curve::compound(const AmbientVector& center, std::vector<CompoundTerm> terms) {
  if (center.size() != 3 || !center.finite()) throw InvalidInput("compound centre must be a finite 3-vector");
  double reach = 0.0;
  for (const CompoundTerm& k : terms) {
    if (!std::isfinite(k.radius) || !std::isfinite(k.omega) || !std::isfinite(k.phi))
      throw InvalidInput("compound term parameters must be finite");
    require_unit(k.u, "compound frame vector u");
    require_unit(k.v, "compound frame vector v");
    if (std::fabs(k.u.dot(k.v)) > kUnitNormTol) throw InvalidInput("compound frame vectors must be orthogonal");
    reach += std::fabs(k.radius);
  }
  if (!(center.norm() > reach)) throw InvalidInput("compound centre norm must exceed the sum of term radii");
  return Curve(Manifold::sphere(), SphericalCompound{center, std::move(terms)});
}

Curve Curve::euclidean(std::vector<ScalarSeries> components) {
  const Manifold m = Manifold::euclidean(components.size());
  for (const ScalarSeries& c : components) {
    bool ok = std::isfinite(c.constant) && std::isfinite(c.linear) && std::isfinite(c.quadratic);
    for (const auto& s : c.sines) ok = ok && std::isfinite(s.amplitude) && std::isfinite(s.omega) && std::isfinite(s.phi);
    if (!ok) throw InvalidInput("series coefficients must be finite");
  }
  return Curve(m, EuclideanAnalytic{std::move(components)});
}

Curve Curve::sampled(const Manifold& manifold, double t0, double step, std::vector<AmbientVector> points) {
  const std::size_t n = points.size();
  if (n < 5) throw IngestionError("too few points (need at least 5)", n);
  if (!std::isfinite(t0) || !std::isfinite(step) || !(step > 0.0))
    throw InvalidInput("sampled grid needs a finite positive step");
  for (std::size_t i = 0; i < n; ++i) {
    AmbientVector& p = points[i];
    if (p.size() != manifold.ambient_dim() || !p.finite()) throw IngestionError("bad coordinates", i);
    if (manifold.is_sphere()) {
      const double norm = p.norm();
      if (std::fabs(norm - 1.0) > kRenormalizeTol) throw IngestionError("point is off the unit sphere", i);
      p *= 1.0 / norm;
    }
  }

  const double h = step;
  std::vector<AmbientVector> vel(n), acc(n);
  const auto& f = points;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 2 && i + 2 < n) {
      vel[i] = (1.0 / (12.0 * h)) * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
      acc[i] = (1.0 / (12.0 * h * h)) *
               (-1.0 * f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]);
    } else if (i == 1 || i + 2 == n) {
      vel[i] = (1.0 / (2.0 * h)) * (f[i + 1] - f[i - 1]);
      acc[i] = (1.0 / (h * h)) * (f[i + 1] - 2.0 * f[i] + f[i - 1]);
    } else if (i == 0) {
      vel[i] = (1.0 / (2.0 * h)) * (-3.0 * f[0] + 4.0 * f[1] - f[2]);
      acc[i] = (1.0 / (h * h)) * (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]);
    } else {
      vel[i] = (1.0 / (2.0 * h)) * (3.0 * f[i] - 4.0 * f[i - 1] + f[i - 2]);
      acc[i] = (1.0 / (h * h)) * (2.0 * f[i] - 5.0 * f[i - 1] + 4.0 * f[i - 2] - f[i - 3]);
    }
    // Stencil error leaves a small radial component; keep the velocity tangent.
    if (manifold.is_sphere()) vel[i] -= vel[i].dot(f[i]) * f[i];
  }
  return Curve(manifold, Sampled{t0, h, std::move(points), std::move(vel), std::move(acc)});
}

std::string Curve::family_name() const {
  return std::visit(Overloaded{[](const GreatCircle&) { return "great_circle"; },
                               [](const Latitude&) { return "latitude"; },
                               [](const SphericalCompound&) { return "compound"; },
                               [](const EuclideanAnalytic&) { return "euclidean"; },
                               [](const Sampled&) { return "sampled"; }},
                    family_);
}

CurveEvaluation Curve::eval(double t) const {
  return std::visit(Overloaded{[t](const GreatCircle& g) { return eval_great_circle(g, t); },
                               [t](const Latitude& l) { return eval_latitude(l, t); },
                               [t](const SphericalCompound& c) { return eval_compound(c, t); },
                               [t](const EuclideanAnalytic& e) { return eval_euclidean(e, t); },
                               [&](const Sampled& s) { return eval_sampled(s, manifold_, t); }},
                    family_);
}

std::optional<double> Curve::period() const {
  return std::visit(
      Overloaded{[](const GreatCircle& g) { return g.phase.period(); },
                 [](const Latitude& l) { return l.phase.period(); },
                 [](const SphericalCompound& c) {
                   std::vector<double> w;
                   for (const auto& k : c.terms)
                     if (k.radius != 0.0) w.push_back(k.omega);
                   return common_period(w);
                 },
                 [](const EuclideanAnalytic& e) -> std::optional<double> {
                   std::vector<double> w;
                   for (const auto& c : e.components) {
                     if (c.linear != 0.0 || c.quadratic != 0.0) return std::nullopt;
                     for (const auto& s : c.sines)
                       if (s.amplitude != 0.0) w.push_back(s.omega);
                   }
                   return common_period(w);
                 },
                 [](const Sampled&) -> std::optional<double> { return std::nullopt; }},
      family_);
}

std::optional<std::pair<double, double>> Curve::domain() const {
  if (const auto* s = std::get_if<Sampled>(&family_)) return std::make_pair(s->t0, s->t_end());
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sampled ingestion

Curve load_sampled(const std::vector<SampleRow>& rows) {
  const std::size_t n = rows.size();
  if (n < 5) throw IngestionError("too few points (need at least 5)", n);
  for (std::size_t i = 0; i < n; ++i) {
    const SampleRow& r = rows[i];
    if (!std::isfinite(r.t) || !std::isfinite(r.x) || !std::isfinite(r.y) || !std::isfinite(r.z))
      throw IngestionError("non-finite value", i);
  }
  const double step = (rows.back().t - rows.front().t) / double(n - 1);
  if (!(step > 0.0)) throw IngestionError("time grid is not ascending", 1);
  for (std::size_t i = 1; i < n; ++i) {
    const double d = rows[i].t - rows[i - 1].t;
    if (!(d > 0.0)) throw IngestionError("time grid is not ascending", i);
    if (std::fabs(d - step) > 1e-9 * step) throw IngestionError("time grid is not uniform", i);
  }
  std::vector<AmbientVector> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    AmbientVector p{rows[i].x, rows[i].y, rows[i].z};
    if (std::fabs(p.norm() - 1.0) > kRenormalizeTol) throw IngestionError("point is off the unit sphere", i);
    points.push_back(p);
  }
  return Curve::sampled(Manifold::sphere(), rows.front().t, step, std::move(points));
}

std::vector<SampleRow> read_sample_csv(std::istream& in) {
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  std::string line;
  if (!std::getline(in, line)) throw IngestionError("missing header", 0);
  {
    std::string header;
    for (char c : line)
      if (c != ' ' && c != '\t' && c != '\r') header += c;
    if (header.rfind("\xEF\xBB\xBF", 0) == 0) header.erase(0, 3);
    if (header != "t,x,y,z") throw IngestionError("header must be t,x,y,z", 0);
  }
  std::vector<SampleRow> rows;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::size_t pos = 0;
    for (;;) {
      const auto comma = line.find(',', pos);
      cells.push_back(trim(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (cells.size() != 4) throw IngestionError("expected 4 fields", row);
    double v[4];
    for (std::size_t k = 0; k < 4; ++k) {
      const std::string& cell = cells[k];
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v[k]);
      if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size())
        throw IngestionError("cannot parse field " + std::to_string(k + 1), row);
    }
    rows.push_back({v[0], v[1], v[2], v[3]});
    ++row;
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Windows and sup-norm estimation

TimeWindow::TimeWindow(double t_min, double t_max, std::size_t samples)
    : t_min_(t_min), t_max_(t_max), samples_(samples) {
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max))
    throw InvalidInput("time window needs finite t_min < t_max");
  if (samples < 3) throw InvalidInput("time window needs at least 3 samples");
}

TimeWindow natural_window(const Curve& curve, std::size_t samples) {
  if (const auto d = curve.domain()) {
    const auto& s = std::get<Sampled>(curve.family());
    return TimeWindow(d->first, d->second, s.points.size());
  }
  if (const auto p = curve.period()) return TimeWindow(0.0, *p, samples);
  return TimeWindow(TimeWindow::kDefaultMin, TimeWindow::kDefaultMax, samples);
}

std::vector<double> sample_scalar(const TimeWindow& window, const TimeFunction& f) {
  const std::size_t n = window.samples();
  std::vector<double> values(n);
  parallel_chunks(n, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) values[i] = f(window.time(i));
  });
  for (std::size_t i = 0; i < n; ++i)
    if (std::isnan(values[i])) throw NumericFailure("quantity evaluated to NaN", window.time(i));
  return values;
}

SupEstimate sup_scalar(const TimeWindow& window, const TimeFunction& f) {
  const std::vector<double> values = sample_scalar(window, f);
  const std::size_t n = values.size();

  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (values[i] > values[best]) best = i;

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left = i == 0 || values[i] >= values[i - 1];
    const bool right = i + 1 == n || values[i] >= values[i + 1];
    if (left && right) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](auto a, auto b) { return values[a] > values[b]; });
  if (peaks.size() > 3) peaks.resize(3);
  if (peaks.empty()) peaks.push_back(best);

  SupEstimate est;
  est.grid_value = values[best];
  est.value = values[best];
  est.argmax_t = window.time(best);
  est.grid_step = window.step();
  est.samples = n;

  auto checked = [&](double t) {
    const double v = f(t);
    if (std::isnan(v)) throw NumericFailure("quantity evaluated to NaN", t);
    return v;
  };
  for (std::size_t i : peaks) {
    const double a = window.time(i == 0 ? 0 : i - 1);
    const double b = window.time(std::min(i + 1, n - 1));
    const double tol = 1e-13 * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
    const LineMaximum m = golden_section_max(checked, a, b, tol);
    if (m.value > est.value) {
      est.value = m.value;
      est.argmax_t = m.t;
    }
  }
  est.refined = std::fabs(est.value - est.grid_value) <= 1e-10 * std::max(1.0, std::fabs(est.grid_value));
  return est;
}

double speed(const CurveEvaluation& e) { return e.xdot.norm(); }

double covariant_accel_norm(const Manifold& m, const CurveEvaluation& e) {
  return m.covariant_accel(e.x, e.xdot, e.xddot).norm();
}

SupEstimate sup_norm(const Curve& curve, const TimeWindow& window, const EvalFunction& quantity) {
  return sup_scalar(window, [&](double t) { return quantity(curve.eval(t)); });
}

SupEstimate sup_norm(const Curve& curve, const TimeWindow& window, CurveQuantity quantity) {
  const Manifold& m = curve.manifold();
  switch (quantity) {
    case CurveQuantity::Speed:
      return sup_norm(curve, window, EvalFunction(speed));
    case CurveQuantity::CovariantAccelNorm:
      return sup_norm(curve, window, [&m](const CurveEvaluation& e) { return covariant_accel_norm(m, e); });
  }
  throw InvalidInput("unknown curve quantity");
}

}  // namespace manifold_landau
